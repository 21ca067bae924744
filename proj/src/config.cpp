#include "symdisc/config.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>

#include "symdisc/errors.hpp"

namespace symdisc {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double to_double(const std::string& key, const std::string& v) {
    std::size_t pos = 0;
    double d = 0;
    try {
        d = std::stod(v, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != v.size() || !std::isfinite(d)) throw ConfigError("key '" + key + "': not a number: " + v);
    return d;
}

long long to_int(const std::string& key, const std::string& v) {
    std::size_t pos = 0;
    long long n = 0;
    try {
        n = std::stoll(v, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != v.size()) throw ConfigError("key '" + key + "': not an integer: " + v);
    return n;
}

using Setter = std::function<void(ExperimentConfig&, const std::string&, const std::string&)>;

Setter str(std::string ExperimentConfig::*m) {
    return [m](ExperimentConfig& c, const std::string&, const std::string& v) { c.*m = v; };
}
Setter num(double ExperimentConfig::*m) {
    return [m](ExperimentConfig& c, const std::string& k, const std::string& v) { c.*m = to_double(k, v); };
}
Setter integer(int ExperimentConfig::*m) {
    return [m](ExperimentConfig& c, const std::string& k, const std::string& v) {
        c.*m = static_cast<int>(to_int(k, v));
    };
}

const std::map<std::string, Setter>& setters() {
    static const std::map<std::string, Setter> table = {
        {"equation", str(&ExperimentConfig::equation)},
        {"scheme", str(&ExperimentConfig::scheme)},
        {"strategy", str(&ExperimentConfig::strategy)},
        {"domain_a", num(&ExperimentConfig::domain_a)},
        {"domain_b", num(&ExperimentConfig::domain_b)},
        {"N", integer(&ExperimentConfig::N)},
        {"C", num(&ExperimentConfig::C)},
        {"final_time", num(&ExperimentConfig::final_time)},
        {"nu", num(&ExperimentConfig::nu)},
        {"alpha", num(&ExperimentConfig::alpha)},
        {"ic", str(&ExperimentConfig::ic)},
        {"c1", num(&ExperimentConfig::c1)},
        {"c2", num(&ExperimentConfig::c2)},
        {"a1", num(&ExperimentConfig::a1)},
        {"a2", num(&ExperimentConfig::a2)},
        {"kdv_nonlinearity", num(&ExperimentConfig::kdv_nonlinearity)},
        {"burgers_c", num(&ExperimentConfig::burgers_c)},
        {"limiter", str(&ExperimentConfig::limiter)},
        {"theta_index", str(&ExperimentConfig::theta_index)},
        {"h", num(&ExperimentConfig::h)},
        {"schwarzian_F", num(&ExperimentConfig::schwarzian_F)},
        {"rel_tol", num(&ExperimentConfig::rel_tol)},
        {"uxx_f", num(&ExperimentConfig::uxx_f)},
        {"uxx_slope", num(&ExperimentConfig::uxx_slope)},
        {"uxx_intercept", num(&ExperimentConfig::uxx_intercept)},
        {"ic_value", num(&ExperimentConfig::ic_value)},
        {"newton_tol", num(&ExperimentConfig::newton_tol)},
        {"newton_max_iter", integer(&ExperimentConfig::newton_max_iter)},
        {"tangling_factor", num(&ExperimentConfig::tangling_factor)},
        {"snapshot_every", integer(&ExperimentConfig::snapshot_every)},
        {"output", str(&ExperimentConfig::output)},
        {"diagnostics", str(&ExperimentConfig::diagnostics)},
        {"seed", [](ExperimentConfig& c, const std::string& k, const std::string& v) {
             const long long s = to_int(k, v);
             if (s < 0) throw ConfigError("seed must be non-negative");
             c.seed = static_cast<std::uint64_t>(s);
         }},
    };
    return table;
}

// Equation-specific defaults for keys the file leaves out.
void apply_defaults(ExperimentConfig& c) {
    auto unset = [&](const char* k) { return !c.given.count(k); };
    if (c.equation == "burgers") {
        if (unset("domain_a")) c.domain_a = -0.5;
        if (unset("domain_b")) c.domain_b = 0.5;
        if (unset("C")) c.C = 0.4;
        if (unset("final_time")) c.final_time = 0.5;
        if (unset("ic")) c.ic = "exact";
        if (unset("scheme")) c.scheme = "fv";
    } else if (c.equation == "kdv") {
        if (unset("scheme")) c.scheme = "10pt";
    } else if (c.equation == "schwarzian") {
        if (unset("domain_a")) c.domain_a = 0.0;
        if (unset("domain_b")) c.domain_b = 3.0;
        if (unset("ic")) c.ic = "tan";
        if (unset("scheme")) c.scheme = "invariant";
    } else if (c.equation == "uxx") {
        if (unset("domain_a")) c.domain_a = 0.0;
        if (unset("domain_b")) c.domain_b = 1.0;
        if (unset("ic")) c.ic = "affine";
        if (unset("scheme")) c.scheme = "weak";
    }
}

}  // namespace

ExperimentConfig parse_config(const std::string& text) {
    ExperimentConfig cfg;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        const auto it = setters().find(key);
        if (it == setters().end()) throw ConfigError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        if (value.empty()) throw ConfigError("line " + std::to_string(lineno) + ": empty value for '" + key + "'");
        if (!cfg.given.insert(key).second)
            throw ConfigError("line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
        it->second(cfg, key, value);
    }
    apply_defaults(cfg);
    check_config(cfg);
    return cfg;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ConfigError("cannot open config file " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_config(ss.str());
}

void check_config(const ExperimentConfig& c) {
    auto fail = [](const std::string& m) { throw ConfigError(m); };
    if (!(c.domain_a < c.domain_b)) fail("domain_a must be below domain_b");
    if (c.equation == "kdv") {
        if (c.N < 8) fail("N must be at least 8");
        if (!(c.final_time > 0)) fail("final_time must be positive");
        if (!(c.C > 0)) fail("C must be positive");
        if (c.scheme != "10pt" && c.scheme != "6pt" && c.scheme != "naive")
            fail("kdv scheme must be 10pt, 6pt or naive");
        if (c.strategy != "lagrangian" && c.strategy != "adaptive" && c.strategy != "projection")
            fail("strategy must be lagrangian, adaptive or projection");
        if (c.scheme != "naive" && c.strategy == "adaptive" && !c.given.count("alpha"))
            fail("adaptive strategy needs alpha");
        if (c.ic != "double_soliton" && c.ic != "constant") fail("kdv ic must be double_soliton or constant");
        if (!(c.kdv_nonlinearity > 0)) fail("kdv_nonlinearity must be positive");
        if (c.ic == "double_soliton" && !(c.c1 > 0 && c.c2 >= 0)) fail("soliton speeds must be positive");
    } else if (c.equation == "burgers") {
        if (c.N < 8) fail("N must be at least 8");
        if (!(c.final_time > 0)) fail("final_time must be positive");
        if (!(c.C > 0)) fail("C must be positive");
        if (c.scheme != "fv") fail("burgers scheme must be fv");
        if (!c.given.count("alpha")) fail("burgers runs use the adaptive mesh and need alpha");
        if (c.alpha < 0) fail("alpha must be non-negative");
        if (!(c.nu > 0)) fail("nu must be positive for the exact solution");
        if (c.ic != "exact" && c.ic != "constant") fail("burgers ic must be exact or constant");
        if (c.limiter != "minmod" && c.limiter != "low" && c.limiter != "high") fail("unknown limiter");
        if (c.theta_index != "current" && c.theta_index != "previous") fail("unknown theta_index");
    } else if (c.equation == "schwarzian") {
        if (!(c.h > 0)) fail("h must be positive");
        if (c.scheme != "invariant" && c.scheme != "rk45") fail("schwarzian scheme must be invariant or rk45");
        if (c.ic != "tan") fail("schwarzian ic must be tan");
        if (!(c.rel_tol > 0)) fail("rel_tol must be positive");
    } else if (c.equation == "uxx") {
        if (c.N < 8) fail("N must be at least 8");
        if (!(c.uxx_f > 0)) fail("uxx_f must be positive");
        if (c.scheme != "weak") fail("uxx scheme must be weak");
    } else {
        fail("equation must be schwarzian, kdv, burgers or uxx");
    }
    if (c.newton_max_iter < 1) fail("newton_max_iter must be at least 1");
    if (!(c.newton_tol > 0)) fail("newton_tol must be positive");
    if (c.snapshot_every < 0) fail("snapshot_every must be non-negative");
}

}  // namespace symdisc
