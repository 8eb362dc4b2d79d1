#pragma once
#include <stdexcept>
#include <string>
#include <utility>

namespace toricsod {

/* Domain error carrying a stable machine-readable kind tag next to the
 * human-readable message.  The CLI maps these to {"error":{"kind",...}}
 * reports with exit code 1; everything else is a hard bug. */
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(message), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

[[noreturn]] inline void fail(const std::string& kind, const std::string& message) {
    throw Error(kind, message);
}

/* Internal consistency assertion.  A failure means the library itself is
 * wrong (a violated theorem or a convention slip), never bad user input. */
inline void check(bool ok, const std::string& what) {
    if (!ok) throw Error("InternalCheck", what);
}

}  // namespace toricsod
