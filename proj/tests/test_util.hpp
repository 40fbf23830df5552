#pragma once

#include <catch2/catch_amalgamated.hpp>

#include <utility>

#include <derspec/error.hpp>
#include <derspec/partition.hpp>

namespace testutil {

// Runs f, which must throw derspec::error, and returns the thrown code.
template <class F>
derspec::errc code_of(F&& f) {
    try {
        std::forward<F>(f)();
    } catch (const derspec::error& e) {
        return e.code();
    }
    FAIL("expected the call to throw");
    return derspec::errc::internal_error;
}

inline derspec::Partition P(std::string_view text) { return derspec::Partition::parse(text); }

} // namespace testutil
