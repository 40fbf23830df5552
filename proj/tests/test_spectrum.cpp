#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <vector>

#include <derspec/partition.hpp>
#include <derspec/spectrum.hpp>

#include "test_util.hpp"

using namespace derspec;
using testutil::P;
using testutil::code_of;

TEST_CASE("derangement numbers") {
    CHECK(derangement_number(0) == 1);
    CHECK(derangement_number(1) == 0);
    CHECK(derangement_number(2) == 1);
    CHECK(derangement_number(4) == 9);
    CHECK(derangement_number(6) == 265);
    CHECK(derangement_number(15) == ExactInt("481066515734"));
}

TEST_CASE("derangement classes partition the derangement count") {
    for (long long n = 2; n <= 12; ++n) {
        ExactInt total = 0;
        for (const CycleType& cls : derangement_classes(n)) {
            CHECK((cls.shape.empty() || cls.shape.last() >= 2));
            CHECK(cls.shape.sum() == n);
            total += cls.class_size;
        }
        CHECK(total == derangement_number(n));
    }
}

TEST_CASE("class sizes sum to the group order") {
    for (long long n = 1; n <= 10; ++n) {
        ExactInt total = 0;
        for (const Partition& p : enumerate(n)) total += conjugacy_class_size(p);
        CHECK(total == factorial(n));
    }
    CHECK(conjugacy_class_size(P("3,2")) == 20);
    CHECK(conjugacy_class_size(P("1^4")) == 1);
    CHECK(conjugacy_class_size(P("2,2")) == 3);
}

TEST_CASE("eigenvalue routes on pinned values") {
    CHECK(eta_new(Partition{}) == 1);
    CHECK(eta_new(P("1")) == 0);
    CHECK(eta_new(P("2,2")) == 3);
    CHECK(eta_new(P("15")) == ExactInt("481066515734"));
    CHECK(eta_renteln(P("1")) == 0);
    CHECK(eta_renteln(P("3,1")) == -3);
    CHECK(eta_renteln(P("5,1")) == -53);
    CHECK(eta_schur_sum(P("2")) == 1);
    CHECK(eta_schur_sum(P("1,1")) == -1);
    CHECK(eta_schur_sum(P("4,2,1,1")) == 21);
}

TEST_CASE("character route on pinned values") {
    CHECK(eta_character(P("3,1")) == -3);
    CHECK(eta_character(Partition{}) == 1);
    for (long long n = 2; n <= 10; ++n) {
        std::vector<long long> hook{n - 1};
        hook.push_back(1);
        CHECK(eta_character(Partition(std::vector<long long>{n})) == derangement_number(n));
        CHECK((n - 1) * eta_character(Partition(hook)) == -derangement_number(n));
    }
    CHECK(code_of([] { eta_character(P("7,6")); }) == errc::too_large);
    CHECK(eta_character(P("13"), 13) == derangement_number(13));
}

TEST_CASE("character table spot values") {
    CHECK(detail::mn_character({2, 2}, {2, 2}) == 2);
    CHECK(detail::mn_character({1, 1, 1, 1}, {4}) == -1);
    CHECK(detail::mn_character({1, 1, 1, 1}, {2, 2}) == 1);
    CHECK(detail::mn_character({3, 1}, {4}) == -1);
    CHECK(detail::mn_character({3, 1}, {2, 2}) == -1);
    for (const Partition& lam : enumerate(5))
        CHECK(detail::mn_character(lam.parts(), {1, 1, 1, 1, 1}) == dim(lam));
}

TEST_CASE("all four routes agree for n <= 9") {
    for (long long n = 0; n <= 9; ++n) {
        for (const Partition& p : enumerate(n)) {
            const ExactInt want = eta_new(p);
            CHECK(eta_renteln(p) == want);
            CHECK(eta_schur_sum(p) == want);
            CHECK(eta_character(p) == want);
        }
    }
}

TEST_CASE("absolute eigenvalue recurrence") {
    CHECK(abs_eta(Partition{}) == 1);
    CHECK(abs_eta(P("1")) == 0);
    CHECK(abs_eta(P("3")) == 2);
    CHECK(abs_eta(P("3,1")) == 3);
    CHECK(abs_eta(P("4,1,1")) == 13);
    CHECK(abs_eta(P("6,4,3")) == 996);
    for (long long n = 0; n <= 10; ++n)
        for (const Partition& p : enumerate(n)) CHECK(abs_eta(p) == abs(eta_new(p)));
}

TEST_CASE("split expansion of the absolute eigenvalue") {
    CHECK(abs_eta_expanded(P("3,1"), 2) == 3);
    CHECK(abs_eta_expanded(P("2,2"), 2) == 3);
    CHECK(code_of([] { abs_eta_expanded(P("3,1"), 1); }) == errc::bad_index);
    CHECK(code_of([] { abs_eta_expanded(P("3,1"), 3); }) == errc::bad_index);
    CHECK(code_of([] { abs_eta_expanded(P("4"), 2); }) == errc::bad_index);
    for (long long n = 2; n <= 9; ++n)
        for (const Partition& p : enumerate(n))
            for (long long m = 2; m <= static_cast<long long>(p.length()); ++m)
                CHECK(abs_eta_expanded(p, m) == abs_eta(p));
}

TEST_CASE("predicted sign") {
    CHECK(asp_sign(P("3,1")) == -1);
    CHECK(asp_sign(P("2,2,1")) == -1);
    CHECK(asp_sign(P("6")) == 1);
    CHECK(asp_sign(P("2,2")) == 1);
    CHECK(code_of([] { asp_sign(P("1")); }) == errc::too_small);
    CHECK(code_of([] { asp_sign(Partition{}); }) == errc::too_small);
}

TEST_CASE("spectrum table for small n") {
    const std::vector<SpectrumEntry> two = spectrum_table(2);
    REQUIRE(two.size() == 2);
    CHECK(two[0].partition == P("2"));
    CHECK(two[0].eta == 1);
    CHECK(two[0].sign == 1);
    CHECK(two[0].multiplicity == 1);
    CHECK(two[1].partition == P("1,1"));
    CHECK(two[1].eta == -1);

    CHECK(spectrum_table(5).size() == 7);
    CHECK(spectrum_table(11, 5).size() == 29);
    CHECK(code_of([] { spectrum_table(0); }) == errc::bad_index);

    const std::vector<SpectrumEntry> one = spectrum_table(1);
    REQUIRE(one.size() == 1);
    CHECK(one[0].eta == 0);
    CHECK(one[0].sign == 0);
}

TEST_CASE("threaded spectrum table matches the serial one") {
    const std::vector<SpectrumEntry> serial = spectrum_table(9);
    const std::vector<SpectrumEntry> parallel = spectrum_table(9, std::nullopt, 4);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].partition == parallel[i].partition);
        CHECK(serial[i].eta == parallel[i].eta);
        CHECK(serial[i].multiplicity == parallel[i].multiplicity);
    }
}

TEST_CASE("pinned deep value") {
    CHECK(eta_new(P("7,3,2,1")) == 4239);
}

TEST_CASE("spectral moments") {
    const std::array<ExactInt, 3> m4 = trace_moments(4);
    CHECK(m4[0] == 24);
    CHECK(m4[1] == 0);
    CHECK(m4[2] == 216);
    const std::array<ExactInt, 3> m2 = trace_moments(2);
    CHECK(m2[0] == 2);
    CHECK(m2[1] == 0);
    CHECK(m2[2] == 2);
    const std::array<ExactInt, 3> m1 = trace_moments(1);
    CHECK(m1[0] == 1);
    CHECK(m1[1] == 0);
    CHECK(m1[2] == 0);
    CHECK(code_of([] { trace_moments(0); }) == errc::bad_index);
}

TEST_CASE("the least eigenvalue sits at the near-hook") {
    for (long long n = 4; n <= 11; ++n) {
        ExactInt least = eta_new(Partition(std::vector<long long>{n}));
        for (const Partition& p : enumerate(n)) least = std::min(least, eta_new(p));
        std::vector<long long> hook{n - 1, 1};
        CHECK(least == eta_new(Partition(hook)));
        CHECK(least * (n - 1) == -derangement_number(n));
    }
}
