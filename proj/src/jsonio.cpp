#include "gxpeakon/jsonio.hpp"

#include <cstdio>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

namespace gx {

using nlohmann::json;

namespace {

std::vector<double> doubles(const json& j, const char* where) {
    if (!j.is_array()) throw std::runtime_error(std::string(where) + " must be an array");
    std::vector<double> out;
    for (const auto& v : j) {
        if (!v.is_number()) throw std::runtime_error(std::string(where) + " must hold numbers");
        out.push_back(v.get<double>());
    }
    return out;
}

std::vector<int> ints(const json& j, const char* where) {
    if (!j.is_array()) throw std::runtime_error(std::string(where) + " must be an array");
    std::vector<int> out;
    for (const auto& v : j) out.push_back(v.get<int>());
    return out;
}

void parse_group_side(const json& j, const char* where, std::vector<std::vector<double>>& tau,
                      std::vector<std::vector<double>>& sigma) {
    if (!j.is_array()) throw std::runtime_error(std::string(where) + " must be an array of groups");
    for (const auto& g : j) {
        tau.push_back(g.contains("tau") ? doubles(g.at("tau"), "tau") : std::vector<double>{});
        sigma.push_back(g.contains("sigma") ? doubles(g.at("sigma"), "sigma")
                                            : std::vector<double>{});
    }
}

}  // namespace

RunConfig parse_config(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(std::string("config parse error: ") + e.what());
    }

    RunConfig cfg;
    try {
        const json& lay = doc.at("layout");
        cfg.layout.x_sizes = ints(lay.at("x_sizes"), "layout.x_sizes");
        cfg.layout.y_sizes = ints(lay.at("y_sizes"), "layout.y_sizes");

        const json& sp = doc.at("spectral");
        cfg.spectral.lambda = doubles(sp.at("lambda"), "spectral.lambda");
        cfg.spectral.mu = sp.contains("mu") ? doubles(sp.at("mu"), "spectral.mu")
                                            : std::vector<double>{};
        cfg.spectral.a0 = doubles(sp.at("a0"), "spectral.a0");
        cfg.spectral.b0 = sp.contains("b0") ? doubles(sp.at("b0"), "spectral.b0")
                                            : std::vector<double>{};
        cfg.spectral.C = sp.at("C").get<double>();
        cfg.spectral.D = sp.at("D").get<double>();

        if (doc.contains("groups")) {
            const json& gr = doc.at("groups");
            if (gr.contains("x")) parse_group_side(gr.at("x"), "groups.x", cfg.params.x_tau,
                                                   cfg.params.x_sigma);
            if (gr.contains("y")) parse_group_side(gr.at("y"), "groups.y", cfg.params.y_tau,
                                                   cfg.params.y_sigma);
        }
        // Singleton-only configs may omit "groups" entirely.
        cfg.params.x_tau.resize(cfg.layout.x_sizes.size());
        cfg.params.x_sigma.resize(cfg.layout.x_sizes.size());
        cfg.params.y_tau.resize(cfg.layout.y_sizes.size());
        cfg.params.y_sigma.resize(cfg.layout.y_sizes.size());

        if (doc.contains("run")) {
            const json& run = doc.at("run");
            if (run.contains("t0")) cfg.t0 = run.at("t0").get<double>();
            if (run.contains("t1")) cfg.t1 = run.at("t1").get<double>();
            if (run.contains("samples")) cfg.samples = run.at("samples").get<int>();
            if (run.contains("h")) cfg.h = run.at("h").get<double>();
            if (run.contains("steps")) cfg.steps = run.at("steps").get<int>();
            if (run.contains("tolerance")) cfg.tolerance = run.at("tolerance").get<double>();
        }
    } catch (const json::exception& e) {
        throw std::runtime_error(std::string("config error: ") + e.what());
    }
    return cfg;
}

std::string config_to_json(const GroupLayout& layout, const SpectralData& spectral,
                           const GroupParams& params) {
    json doc;
    doc["layout"] = {{"x_sizes", layout.x_sizes}, {"y_sizes", layout.y_sizes}};
    doc["spectral"] = {{"lambda", spectral.lambda}, {"mu", spectral.mu}, {"a0", spectral.a0},
                       {"b0", spectral.b0},         {"C", spectral.C},   {"D", spectral.D}};
    json gx_side = json::array(), gy_side = json::array();
    for (std::size_t g = 0; g < params.x_tau.size(); ++g)
        gx_side.push_back({{"tau", params.x_tau[g]}, {"sigma", params.x_sigma[g]}});
    for (std::size_t g = 0; g < params.y_tau.size(); ++g)
        gy_side.push_back({{"tau", params.y_tau[g]}, {"sigma", params.y_sigma[g]}});
    doc["groups"] = {{"x", gx_side}, {"y", gy_side}};
    return doc.dump(2) + "\n";
}

void write_csv(std::ostream& os, const Table& table) {
    for (std::size_t c = 0; c < table.columns.size(); ++c)
        os << (c ? "," : "") << table.columns[c];
    os << "\n";
    char buf[40];
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            std::snprintf(buf, sizeof buf, "%.17g", row[c]);
            os << (c ? "," : "") << buf;
        }
        os << "\n";
    }
}

void write_json(std::ostream& os, const Table& table) {
    json doc;
    doc["meta"] = {{"parity", table.parity},
                   {"K", table.K},
                   {"x_sizes", table.x_sizes},
                   {"y_sizes", table.y_sizes}};
    doc["columns"] = table.columns;
    doc["rows"] = table.rows;
    os << doc.dump(2) << "\n";
}

}  // namespace gx
