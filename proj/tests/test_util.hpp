#pragma once
#include <functional>
#include <string>

#include "toricsod/error.hpp"

/* Runs f and reports the kind tag of the domain error it throws: "none" when
 * it returns normally, "other" for a foreign exception type. */
inline std::string thrown_kind(const std::function<void()>& f) {
    try {
        f();
    } catch (const toricsod::Error& e) {
        return e.kind();
    } catch (...) {
        return "other";
    }
    return "none";
}
