#include <doctest.h>

#include <cmath>
#include <vector>

#include "gxpeakon/characteristic.hpp"
#include "gxpeakon/fixtures.hpp"
#include "gxpeakon/solve.hpp"

using namespace gx;

namespace {

Solver fixture_solver(const char* name) {
    const Fixture f = fixture(name);
    return Solver(f.layout, f.spectral, f.params);
}

// Log-spaced interior sample of a theta range.
std::vector<double> theta_grid(const CharFamily& fam, int count) {
    const double lo = fam.theta_lo > 0.0 ? fam.theta_lo * (1.0 + 1e-9) : 1e-12;
    const double hi = std::isfinite(fam.theta_hi) ? fam.theta_hi * (1.0 - 1e-9) : lo * 1e24;
    std::vector<double> out;
    for (int k = 0; k < count; ++k)
        out.push_back(lo * std::pow(hi / lo, (k + 0.5) / count));
    return out;
}

double peakon_position(const PeakonState& st, const PeakonRef& ref) {
    return ref.side == Side::X ? st.x[ref.group - 1][ref.member - 1]
                               : st.y[ref.group - 1][ref.member - 1];
}

}  // namespace

TEST_CASE("family enumeration covers every gap plus the outer regions") {
    SUBCASE("1+1 interlacing: three families") {
        const Solver solver = fixture_solver("ex-1x1");
        const Characteristics chars(solver);
        REQUIRE(chars.families().size() == 3);
        CHECK(chars.families()[0].region == CharFamily::Region::far_left);
        CHECK(chars.families()[1].region == CharFamily::Region::between);
        CHECK(chars.families()[2].region == CharFamily::Region::far_right);
        // 1+1 singleton pair: theta between M/C and D; CD > 1 makes the
        // range nonempty.
        CHECK(chars.families()[1].theta_lo == doctest::Approx(1.0 / solver.spectral().C));
        CHECK(chars.families()[1].theta_hi == doctest::Approx(solver.spectral().D));
    }
    SUBCASE("2+2-with-group: six families (4 gaps + 2 outer regions)") {
        const Solver solver = fixture_solver("ex-proof-technique");
        const Characteristics chars(solver);
        CHECK(chars.families().size() == 6);
        int within = 0, between = 0;
        for (const auto& f : chars.families()) {
            within += f.region == CharFamily::Region::within;
            between += f.region == CharFamily::Region::between;
        }
        CHECK(within == 1);
        CHECK(between == 3);
    }
    SUBCASE("rightmost singleton next to a group caps theta at D") {
        GroupLayout lay{{2}, {1}};
        SpectralData sp{{1.0}, {}, {1.0}, {}, 1.0, 7.0};
        GroupParams par{{{1.0}}, {{2.0}}, {{}}, {{}}};
        const Solver solver(lay, sp, par);
        const Characteristics chars(solver);
        // far-left, within-gap, between, far-right
        REQUIRE(chars.families().size() == 4);
        const auto& between = chars.families()[2];
        CHECK(between.region == CharFamily::Region::between);
        CHECK(between.theta_lo == doctest::Approx(2.0));  // last sigma
        CHECK(between.theta_hi == doctest::Approx(7.0));  // D
    }
}

TEST_CASE("the ghost family of the 2+2-with-group fixture") {
    const Solver solver = fixture_solver("ex-proof-technique");
    const Characteristics chars(solver);
    const CharFamily* within = nullptr;
    for (const auto& f : chars.families())
        if (f.region == CharFamily::Region::within) within = &f;
    REQUIRE(within != nullptr);
    CHECK(within->side == Side::X);
    CHECK(within->group == 2);

    SUBCASE("theta = 1e-15 stays between the group members") {
        // Strict at t = 0; at |t| = 40 the bounding gap itself shrinks
        // below double resolution, so the comparison gets that slack.
        for (double t : {-40.0, 0.0, 40.0}) {
            const PeakonState st = solver.solve(t);
            const double xi = chars.xi(*within, 1e-15, t);
            if (t == 0.0) {
                CHECK(st.x[1][0] < xi);
                CHECK(xi < st.x[1][1]);
            } else {
                CHECK(xi > st.x[1][0] - 1e-9);
                CHECK(xi < st.x[1][1] + 1e-9);
            }
        }
    }
    SUBCASE("the published fan of 14 curves solves the characteristic ODE") {
        for (int k = 0; k <= 13; ++k) {
            const double theta = std::pow(10.0, -35.0 + 5.0 * k);
            INFO("theta = 1e" << -35 + 5 * k);
            CHECK(chars.residual(*within, theta, 0.0, 1e-5) < 1e-6);
        }
    }
    SUBCASE("boundary limits reach the bounding trajectories") {
        for (double t : {-10.0, 0.0, 10.0}) {
            const PeakonState st = solver.solve(t);
            CHECK(chars.xi(*within, 1e-30, t) == doctest::Approx(st.x[1][0]).epsilon(1e-10));
            CHECK(chars.xi_at_upper_limit(*within, t) == doctest::Approx(st.x[1][1]).epsilon(1e-12));
        }
    }
}

TEST_CASE("between-family limits recover the neighbours") {
    const Solver solver = fixture_solver("ex-3x3-interlacing");
    const Characteristics chars(solver);
    for (const auto& fam : chars.families()) {
        if (fam.region != CharFamily::Region::between) continue;
        const PeakonState st = solver.solve(1.3);
        if (fam.theta_lo > 0.0) {
            const double lo_val = chars.xi(fam, fam.theta_lo, 1.3);
            CHECK(lo_val == doctest::Approx(peakon_position(st, *fam.lower_target)).epsilon(1e-10));
        }
        const double hi_val = chars.xi_at_upper_limit(fam, 1.3);
        if (std::isfinite(fam.theta_hi) || fam.region == CharFamily::Region::between) {
            CHECK(hi_val == doctest::Approx(peakon_position(st, *fam.upper_target)).epsilon(1e-10));
        }
    }
}

TEST_CASE("far regions: additive tail on the right, harmonic tail on the left") {
    const Solver solver = fixture_solver("ex-1x1");
    const Characteristics chars(solver);
    const auto& far_left = chars.families().front();
    const auto& far_right = chars.families().back();
    const PeakonState st = solver.solve(0.0);

    // Residuals of curves in the outer regions.
    CHECK(chars.residual(far_left, 1.0, 0.0, 1e-5) < 1e-6);
    CHECK(chars.residual(far_right, 1.0, 0.0, 1e-5) < 1e-6);

    // Small theta on the right recovers the last peakon.
    CHECK(chars.xi(far_right, 1e-14, 0.0) == doctest::Approx(st.y[0][0]).epsilon(1e-10));
    // Large theta on the left recovers the first peakon.
    CHECK(chars.xi_at_upper_limit(far_left, 0.0) == doctest::Approx(st.x[0][0]).epsilon(1e-12));
}

TEST_CASE("families are monotone and non-crossing in theta") {
    const Solver solver = fixture_solver("ex-1x1-groups");
    const Characteristics chars(solver);
    for (const auto& fam : chars.families()) {
        const auto thetas = theta_grid(fam, 6);
        for (double t : {-15.0, 0.0, 15.0}) {
            double prev = -std::numeric_limits<double>::infinity();
            for (double theta : thetas) {
                // Non-crossing: a genuine crossing would reverse by O(1);
                // exponentially close curves may tie at double resolution.
                const double v = chars.xi(fam, theta, t);
                CHECK(v > prev - 1e-9);
                prev = std::max(prev, v);
            }
        }
    }
}

TEST_CASE("peakon trajectories themselves satisfy the characteristic ODE") {
    // The boundary of each family is a peakon trajectory; verify the
    // interior curves stay characteristics across fixtures and times.
    for (const char* name : {"ex-proof-technique", "ex-1x1-groups"}) {
        const Solver solver = fixture_solver(name);
        const Characteristics chars(solver);
        for (const auto& fam : chars.families()) {
            for (double theta : theta_grid(fam, 3)) {
                for (double t : {-8.0, 3.0}) {
                    INFO(name << " region " << static_cast<int>(fam.region) << " theta " << theta);
                    CHECK(chars.residual(fam, theta, t, 1e-5) < 1e-6);
                }
            }
        }
    }
}

TEST_CASE("theta outside the family range is rejected") {
    const Solver solver = fixture_solver("ex-proof-technique");
    const Characteristics chars(solver);
    const auto& between = chars.families()[1];
    CHECK_THROWS_AS(chars.xi(between, -1.0, 0.0), std::domain_error);
}
