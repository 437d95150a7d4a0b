#include "lrtrap/scenario.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace lrtrap {

namespace {

using nlohmann::json;

ModelTag tag_from_string(const std::string& s) {
    if (s == "A" || s == "a" || s == "StarkQuadratic" || s == "stark") return ModelTag::stark_quadratic;
    if (s == "B" || s == "b" || s == "GoldmanKrivchenko" || s == "gk")
        return ModelTag::goldman_krivchenko;
    throw std::invalid_argument("scenario: unknown model tag '" + s + "'");
}

}  // namespace

std::vector<int> parse_n_list(const std::string& spec) {
    std::vector<int> out;
    const auto dots = spec.find("..");
    if (dots != std::string::npos) {
        const int lo = std::stoi(spec.substr(0, dots));
        const int hi = std::stoi(spec.substr(dots + 2));
        if (lo < 0 || hi < lo) throw std::invalid_argument("scenario: bad n range '" + spec + "'");
        for (int i = lo; i <= hi; ++i) out.push_back(i);
        return out;
    }
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        const int v = std::stoi(item);
        if (v < 0) throw std::invalid_argument("scenario: n must be >= 0");
        out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("scenario: empty n list");
    return out;
}

std::vector<Method> parse_method_list(const std::string& spec) {
    std::vector<Method> out;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        const auto m = method_from_string(item);
        if (!m) throw std::invalid_argument("scenario: unknown method '" + item + "'");
        out.push_back(*m);
    }
    if (out.empty()) throw std::invalid_argument("scenario: empty method list");
    return out;
}

Scenario scenario_from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("scenario: JSON parse error: ") + e.what());
    }

    Scenario sc;
    ModelConfig cfg;
    cfg.tag = tag_from_string(j.value("model", std::string("A")));
    cfg.m = j.value("m", 1.0);
    cfg.omega = j.value("omega", 1.0);
    cfg.tau = j.value("tau", 1.0);
    cfg.E0 = j.value("E0", 0.0);
    cfg.hbar = j.value("hbar", 1.0);
    cfg.c_kappa = j.value("c_kappa", 0.0);
    if (j.contains("ell")) {
        const int ell = j.at("ell").get<int>();
        cfg = ModelConfig::gk_from_ell(cfg.m, cfg.omega, cfg.tau, cfg.E0, ell, cfg.hbar);
    } else {
        cfg.Omega = j.value("Omega", 0.0);
    }
    cfg.validate();
    sc.model = cfg;

    if (j.contains("n")) {
        if (j.at("n").is_array())
            sc.n_list = j.at("n").get<std::vector<int>>();
        else if (j.at("n").is_string())
            sc.n_list = parse_n_list(j.at("n").get<std::string>());
        else
            sc.n_list = {j.at("n").get<int>()};
        for (int n : sc.n_list)
            if (n < 0) throw std::invalid_argument("scenario: n must be >= 0");
    }

    if (j.contains("methods")) {
        sc.methods.clear();
        for (const auto& item : j.at("methods")) {
            const auto m = method_from_string(item.get<std::string>());
            if (!m)
                throw std::invalid_argument("scenario: unknown method '" +
                                            item.get<std::string>() + "'");
            sc.methods.push_back(*m);
        }
        if (sc.methods.empty()) throw std::invalid_argument("scenario: empty methods");
    }

    if (j.contains("grid")) {
        const auto& g = j.at("grid");
        GridSpec gs{g.at("xmin").get<double>(), g.at("xmax").get<double>(), g.at("N").get<int>()};
        if (!(gs.xmax > gs.xmin) || gs.n < 64)
            throw std::invalid_argument("scenario: invalid grid spec");
        sc.grid = gs;
    }

    if (j.contains("time")) {
        const auto& t = j.at("time");
        TimeSpec ts{t.value("t0", 0.0), t.at("t1").get<double>(), t.value("steps", 100)};
        if (ts.steps < 2) throw std::invalid_argument("scenario: time.steps must be >= 2");
        sc.time = ts;
    }

    return sc;
}

Scenario scenario_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("scenario: cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return scenario_from_json_text(buf.str());
}

}  // namespace lrtrap
