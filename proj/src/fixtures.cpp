#include "gxpeakon/fixtures.hpp"

#include <stdexcept>

namespace gx {

namespace {

GroupParams empty_params(const GroupLayout& lay) {
    GroupParams p;
    p.x_tau.resize(lay.x_sizes.size());
    p.x_sigma.resize(lay.x_sizes.size());
    p.y_tau.resize(lay.y_sizes.size());
    p.y_sigma.resize(lay.y_sizes.size());
    return p;
}

Fixture make_1x1() {
    Fixture f;
    f.name = "ex-1x1";
    f.layout = {{1}, {1}};
    f.spectral = {{1.0}, {}, {1.0}, {}, 2.0, 1.0};  // CD = 2 > 1
    f.params = empty_params(f.layout);
    return f;
}

Fixture make_2x1() {
    Fixture f;
    f.name = "ex-2x1";
    f.layout = {{1, 1}, {1}};
    f.spectral = {{1.0}, {3.0}, {1.0}, {1.0}, 1e6, 1e20};
    f.params = empty_params(f.layout);
    return f;
}

Fixture make_2x2() {
    Fixture f;
    f.name = "ex-2x2";
    f.layout = {{1, 1}, {1, 1}};
    f.spectral = {{0.2, 1.0}, {1.0 / 3.0}, {1e-4, 1e1}, {1e-6}, 1e20, 1e18};
    f.params = empty_params(f.layout);
    return f;
}

// 2+2 groups: singletons except the second X-group with two peakons.
Fixture make_proof_technique() {
    Fixture f;
    f.name = "ex-proof-technique";
    f.layout = {{1, 2}, {1, 1}};
    f.spectral = {{0.2, 1.0}, {1.0 / 3.0}, {1e-4, 1e1}, {1e-6}, 1e20, 1e18 + 1e5};
    f.params = empty_params(f.layout);
    f.params.x_tau[1] = {1e10};
    f.params.x_sigma[1] = {1e5};
    return f;
}

SpectralData spectral_3x3() {
    return {{0.2, 1.0, 2.0}, {1.0 / 3.0, 4.0}, {1e-4, 1e1, 1e3}, {1e-6, 1e2}, 1e20, 1e18};
}

Fixture make_3x3_interlacing() {
    Fixture f;
    f.name = "ex-3x3-interlacing";
    f.layout = {{1, 1, 1}, {1, 1, 1}};
    f.spectral = spectral_3x3();
    f.params = empty_params(f.layout);
    return f;
}

void fill_3x3_group_params(GroupParams& p) {
    p.x_tau[0] = {1e-10, 1e1};
    p.x_sigma[0] = {1e-15, 1e-3};
    p.y_tau[0] = {1e2, 1e4, 1e8};
    p.y_sigma[0] = {1e-15, 1e-10, 1e-3};
    p.x_tau[1] = {1e5};
    p.x_sigma[1] = {1e-3};
    p.y_tau[1] = {1e5, 1e10, 1e17, 1e20};
    p.y_sigma[1] = {1e-13, 1e-8, 1e-6, 1e-1};
    p.x_tau[2] = {1e5, 1e11, 1e18, 1e20};
    p.x_sigma[2] = {1e-4, 1.0, 1e3, 1e4};
    p.y_tau[2] = {1e5, 1e10, 1e12, 1e12};
    p.y_sigma[2] = {1e-6, 1e-2, 1e-1, 1e1};
}

// 3+3 groups, all non-singletons: 3+4+2+5+5+5 peakons.
Fixture make_3x3_allgroups() {
    Fixture f;
    f.name = "ex-3x3-allgroups";
    f.layout = {{3, 2, 5}, {4, 5, 5}};
    f.spectral = spectral_3x3();
    f.params = empty_params(f.layout);
    fill_3x3_group_params(f.params);
    return f;
}

SpectralData spectral_4x3() {
    return {{0.2, 1.0, 2.0},
            {1.0 / 3.0, 4.0, 8.0},
            {1e-4, 1e1, 1e3},
            {1e-6, 1e2, 1.0},
            1e20,
            1e18};
}

Fixture make_4x3_interlacing() {
    Fixture f;
    f.name = "ex-4x3";
    f.layout = {{1, 1, 1, 1}, {1, 1, 1}};
    f.spectral = spectral_4x3();
    f.params = empty_params(f.layout);
    return f;
}

// The 3+3 all-groups chain plus a fourth X-group with two peakons.
Fixture make_4x3_groups() {
    Fixture f;
    f.name = "ex-4x3-groups";
    f.layout = {{3, 2, 5, 2}, {4, 5, 5}};
    f.spectral = spectral_4x3();
    f.params = empty_params(f.layout);
    fill_3x3_group_params(f.params);
    f.params.x_tau[3] = {1e5};
    f.params.x_sigma[3] = {1e5};
    return f;
}

// Two groups only (K = 1, no mu eigenvalues), four peakons each.
Fixture make_1x1_groups() {
    Fixture f;
    f.name = "ex-1x1-groups";
    f.layout = {{4}, {4}};
    f.spectral = {{1.0}, {}, {1.0}, {}, 1e-6, 1e26};
    f.params = empty_params(f.layout);
    f.params.x_tau[0] = {1e-10, 1e10, 1e10};
    f.params.x_sigma[0] = {1e-8, 1e-3, 1e-1};
    f.params.y_tau[0] = {1e2, 1e4, 1e25};
    f.params.y_sigma[0] = {1e-15, 1e-10, 1e-3};
    return f;
}

}  // namespace

const std::vector<std::string>& fixture_names() {
    static const std::vector<std::string> names = {
        "ex-1x1",           "ex-2x1",          "ex-2x2",        "ex-proof-technique",
        "ex-3x3-interlacing", "ex-3x3-allgroups", "ex-4x3",        "ex-4x3-groups",
        "ex-1x1-groups",
    };
    return names;
}

Fixture fixture(const std::string& name) {
    if (name == "ex-1x1") return make_1x1();
    if (name == "ex-2x1") return make_2x1();
    if (name == "ex-2x2") return make_2x2();
    if (name == "ex-proof-technique") return make_proof_technique();
    if (name == "ex-3x3-interlacing") return make_3x3_interlacing();
    if (name == "ex-3x3-allgroups") return make_3x3_allgroups();
    if (name == "ex-4x3") return make_4x3_interlacing();
    if (name == "ex-4x3-groups") return make_4x3_groups();
    if (name == "ex-1x1-groups") return make_1x1_groups();
    throw std::invalid_argument("unknown fixture: " + name +
                                " (run with --list-fixtures for the available names)");
}

}  // namespace gx
