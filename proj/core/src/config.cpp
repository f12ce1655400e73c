#include "bigeo/config.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

namespace bigeo::sweep {

namespace {

struct RawValue {
    enum class Kind { Number, String, Boolean, List } kind{Kind::Number};
    double number{0.0};
    std::string text;
    bool boolean{false};
    std::vector<RawValue> list;
    int line{0};
    mutable bool consumed{false};
};

using RawMap = std::map<std::string, RawValue>;

[[noreturn]] void fail(const std::string& msg) { throw config_error("config: " + msg); }

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

bool parse_number(const std::string& s, double& out) {
    const char* b = s.data();
    const char* e = b + s.size();
    auto res = std::from_chars(b, e, out);
    return res.ec == std::errc{} && res.ptr == e;
}

RawValue parse_scalar(const std::string& token, int line) {
    RawValue v;
    v.line = line;
    if (token.size() >= 2 && token.front() == '"' && token.back() == '"') {
        v.kind = RawValue::Kind::String;
        v.text = token.substr(1, token.size() - 2);
        return v;
    }
    if (token == "true" || token == "false") {
        v.kind = RawValue::Kind::Boolean;
        v.boolean = token == "true";
        return v;
    }
    if (parse_number(token, v.number)) {
        v.kind = RawValue::Kind::Number;
        return v;
    }
    if (token.empty()) fail("line " + std::to_string(line) + ": empty value");
    for (char c : token)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-'))
            fail("line " + std::to_string(line) + ": cannot parse value '" + token + "'");
    v.kind = RawValue::Kind::String;
    v.text = token;
    return v;
}

RawValue parse_value(const std::string& token, int line) {
    if (!token.empty() && token.front() == '[') {
        if (token.back() != ']') fail("line " + std::to_string(line) + ": unterminated list");
        RawValue v;
        v.kind = RawValue::Kind::List;
        v.line = line;
        const std::string inner = token.substr(1, token.size() - 2);
        std::string item;
        bool in_quotes = false;
        auto flush = [&]() {
            const std::string t = trim(item);
            if (!t.empty()) v.list.push_back(parse_scalar(t, line));
            item.clear();
        };
        for (char c : inner) {
            if (c == '"') in_quotes = !in_quotes;
            if (c == ',' && !in_quotes) {
                flush();
                continue;
            }
            item += c;
        }
        flush();
        return v;
    }
    return parse_scalar(token, line);
}

std::string strip_comment(const std::string& line) {
    bool in_quotes = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        if (line[i] == '"') in_quotes = !in_quotes;
        if (line[i] == '#' && !in_quotes) return line.substr(0, i);
    }
    return line;
}

RawMap tokenize(const std::string& text) {
    RawMap map;
    std::istringstream is(text);
    std::string line;
    std::string section;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const std::string body = trim(strip_comment(line));
        if (body.empty()) continue;
        if (body.front() == '[') {
            if (body.back() != ']')
                fail("line " + std::to_string(lineno) + ": malformed section header");
            section = trim(body.substr(1, body.size() - 2));
            if (section.empty()) fail("line " + std::to_string(lineno) + ": empty section name");
            continue;
        }
        const auto eq = body.find('=');
        if (eq == std::string::npos)
            fail("line " + std::to_string(lineno) + ": expected 'key = value'");
        const std::string key = trim(body.substr(0, eq));
        const std::string value = trim(body.substr(eq + 1));
        if (key.empty()) fail("line " + std::to_string(lineno) + ": empty key");
        const std::string path = section.empty() ? key : section + "." + key;
        if (map.count(path)) fail("duplicate key '" + path + "'");
        map.emplace(path, parse_value(value, lineno));
    }
    return map;
}

class Reader {
public:
    explicit Reader(RawMap map) : map_(std::move(map)) {}

    bool has(const std::string& path) const { return map_.count(path) != 0; }

    bool has_prefix(const std::string& prefix) const {
        auto it = map_.lower_bound(prefix);
        return it != map_.end() && it->first.compare(0, prefix.size(), prefix) == 0;
    }

    double number(const std::string& path, double fallback) {
        const RawValue* v = fetch(path);
        if (!v) return fallback;
        if (v->kind != RawValue::Kind::Number) fail("'" + path + "' must be a number");
        return v->number;
    }

    std::optional<double> number_opt(const std::string& path) {
        const RawValue* v = fetch(path);
        if (!v) return std::nullopt;
        if (v->kind != RawValue::Kind::Number) fail("'" + path + "' must be a number");
        return v->number;
    }

    std::size_t count(const std::string& path, std::size_t fallback) {
        const RawValue* v = fetch(path);
        if (!v) return fallback;
        if (v->kind != RawValue::Kind::Number || v->number < 0.0 ||
            v->number != std::floor(v->number))
            fail("'" + path + "' must be a non-negative integer");
        return static_cast<std::size_t>(v->number);
    }

    bool boolean(const std::string& path, bool fallback) {
        const RawValue* v = fetch(path);
        if (!v) return fallback;
        if (v->kind != RawValue::Kind::Boolean) fail("'" + path + "' must be true or false");
        return v->boolean;
    }

    std::string word(const std::string& path, const std::string& fallback) {
        const RawValue* v = fetch(path);
        if (!v) return fallback;
        if (v->kind != RawValue::Kind::String) fail("'" + path + "' must be a string");
        return v->text;
    }

    std::vector<double> number_list(const std::string& path) {
        const RawValue* v = fetch(path);
        if (!v) return {};
        if (v->kind != RawValue::Kind::List) fail("'" + path + "' must be a list");
        std::vector<double> out;
        for (const auto& item : v->list) {
            if (item.kind != RawValue::Kind::Number) fail("'" + path + "' must list numbers");
            out.push_back(item.number);
        }
        return out;
    }

    std::vector<std::string> word_list(const std::string& path) {
        const RawValue* v = fetch(path);
        if (!v) return {};
        if (v->kind != RawValue::Kind::List) fail("'" + path + "' must be a list");
        std::vector<std::string> out;
        for (const auto& item : v->list) {
            if (item.kind != RawValue::Kind::String) fail("'" + path + "' must list strings");
            out.push_back(item.text);
        }
        return out;
    }

    void reject_unconsumed() const {
        for (const auto& [path, value] : map_)
            if (!value.consumed)
                fail("unknown key '" + path + "' (line " + std::to_string(value.line) + ")");
    }

private:
    const RawValue* fetch(const std::string& path) {
        auto it = map_.find(path);
        if (it == map_.end()) return nullptr;
        it->second.consumed = true;
        return &it->second;
    }

    RawMap map_;
};

std::vector<double> axis_values(Reader& r, const std::string& axis) {
    const std::string base = "sweep." + axis;
    if (r.has(base + ".values")) {
        auto vals = r.number_list(base + ".values");
        if (vals.empty()) fail("'" + base + ".values' must not be empty");
        return vals;
    }
    if (!r.has(base + ".from") && !r.has(base + ".to") && !r.has(base + ".steps")) return {};
    const double from = r.number(base + ".from", 0.0);
    const double to = r.number(base + ".to", from);
    const std::size_t steps = r.count(base + ".steps", 1);
    if (steps < 1) fail("'" + base + ".steps' must be >= 1");
    std::vector<double> vals;
    vals.reserve(steps);
    if (steps == 1) {
        vals.push_back(from);
    } else {
        for (std::size_t i = 0; i < steps; ++i)
            vals.push_back(from +
                           (to - from) * static_cast<double>(i) / static_cast<double>(steps - 1));
    }
    return vals;
}

OutputKind parse_output(const std::string& name) {
    if (name == "geophase") return OutputKind::GeoPhase;
    if (name == "delta_phi") return OutputKind::DeltaPhi;
    if (name == "perturbative") return OutputKind::Perturbative;
    if (name == "concurrence") return OutputKind::Concurrence;
    if (name == "entropy") return OutputKind::Entropy;
    if (name == "factors") return OutputKind::Factors;
    fail("unknown output '" + name +
         "' (expected geophase, delta_phi, perturbative, concurrence, entropy or factors)");
}

} // namespace

ExperimentConfig parse_config(const std::string& text) {
    Reader r(tokenize(text));
    ExperimentConfig cfg;

    cfg.system.omega1 = r.number("system.omega1", 0.5);
    cfg.system.omega2 = r.number("system.omega2", 0.5);
    cfg.system.gamma_qq = r.number("system.gamma_qq", 0.0);
    try {
        cfg.system.validate();
    } catch (const error& e) {
        fail(std::string("system: ") + e.what());
    }

    const std::string kind = r.word("env.kind", "closed");
    if (kind == "closed")
        cfg.env_kind = EnvKind::Closed;
    else if (kind == "boson")
        cfg.env_kind = EnvKind::Boson;
    else if (kind == "spin")
        cfg.env_kind = EnvKind::Spin;
    else
        fail("'env.kind' must be closed, boson or spin");

    if (r.has_prefix("env.boson.") && cfg.env_kind != EnvKind::Boson)
        fail("'env.boson.*' given but env.kind is not boson");
    if (r.has_prefix("env.spin.") && cfg.env_kind != EnvKind::Spin)
        fail("'env.spin.*' given but env.kind is not spin");

    if (cfg.env_kind == EnvKind::Boson) {
        const std::string sp = r.word("env.boson.spectral", "ohmic");
        if (sp == "ohmic")
            cfg.boson.spectral = boson_env::Spectral::Ohmic;
        else if (sp == "supraohmic")
            cfg.boson.spectral = boson_env::Spectral::Supraohmic;
        else
            fail("'env.boson.spectral' must be ohmic or supraohmic");
        cfg.boson.gamma0 = r.number_opt("env.boson.gamma0");
        cfg.boson.gamma01 = r.number("env.boson.gamma01", 0.0);
        cfg.boson.gamma02 = r.number("env.boson.gamma02", 0.0);
        cfg.boson.gamma012 = r.number("env.boson.gamma012", 0.0);
        cfg.boson.cutoff_lambda = r.number_opt("env.boson.cutoff_lambda");
        cfg.boson.cutoff_lambda_over_omega = r.number("env.boson.cutoff_lambda_over_omega", 100.0);
        const std::string conv = r.word("env.boson.convention", "maintext");
        if (conv == "maintext")
            cfg.boson.convention = boson_env::PrefactorConvention::MainText;
        else if (conv == "appendix")
            cfg.boson.convention = boson_env::PrefactorConvention::Appendix;
        else
            fail("'env.boson.convention' must be maintext or appendix");
    }

    if (cfg.env_kind == EnvKind::Spin) {
        cfg.spin.n_spins = r.count("env.spin.n_spins", 1);
        if (cfg.spin.n_spins < 1) fail("'env.spin.n_spins' must be >= 1");
        cfg.spin.h = r.number("env.spin.h", 1.0);
        if (cfg.spin.h < 0.0) fail("'env.spin.h' must be >= 0");
        cfg.spin.lambda_over_h = r.number_opt("env.spin.lambda_over_h");
        cfg.spin.eps_over_h = r.number_opt("env.spin.eps_over_h");
        cfg.spin.eps = r.number_opt("env.spin.eps");
        cfg.spin.lam = r.number_opt("env.spin.lam");
        cfg.spin.random = r.boolean("env.spin.random", false);
        cfg.spin.coupling_min = r.number("env.spin.coupling_min", 0.0);
        cfg.spin.coupling_max = r.number("env.spin.coupling_max", 0.0);
        if ((cfg.spin.lambda_over_h || cfg.spin.eps_over_h) && !(cfg.spin.h > 0.0))
            fail("'env.spin.lambda_over_h' requires h > 0; use absolute eps/lam instead");
        if (cfg.spin.random && !(cfg.spin.coupling_max >= cfg.spin.coupling_min))
            fail("'env.spin.coupling_max' must be >= coupling_min");
    }

    const std::string stype = r.word("state.type", "werner");
    if (stype == "werner")
        cfg.state.general = false;
    else if (stype == "general")
        cfg.state.general = true;
    else
        fail("'state.type' must be werner or general");
    const std::string branch = r.word("state.branch", "theta");
    if (branch == "theta")
        cfg.state.branch = Branch::Theta;
    else if (branch == "mu")
        cfg.state.branch = Branch::Mu;
    else
        fail("'state.branch' must be theta or mu");
    cfg.state.r = r.number("state.r", 1.0);
    cfg.state.p = r.number("state.p", 0.5);
    if (cfg.state.general) {
        GeneralInitialState s;
        s.alpha = {r.number("state.alpha_re", 1.0), r.number("state.alpha_im", 0.0)};
        s.beta = {r.number("state.beta_re", 0.0), r.number("state.beta_im", 0.0)};
        s.zeta = {r.number("state.zeta_re", 0.0), r.number("state.zeta_im", 0.0)};
        s.delta = {r.number("state.delta_re", 0.0), r.number("state.delta_im", 0.0)};
        try {
            s.validate();
        } catch (const error& e) {
            fail(std::string("state: ") + e.what());
        }
        cfg.state.amplitudes = s;
    } else {
        try {
            WernerSpec{cfg.state.r, cfg.state.p, cfg.state.branch}.validate();
        } catch (const error& e) {
            fail(std::string("state: ") + e.what());
        }
    }

    for (const char* axis : {"p", "gamma0", "lambda_over_h", "n_spins", "r"}) {
        auto vals = axis_values(r, axis);
        if (vals.empty()) continue;
        const std::string name(axis);
        if (name == "gamma0" && cfg.env_kind != EnvKind::Boson)
            fail("sweep axis 'gamma0' requires env.kind = boson");
        if ((name == "lambda_over_h" || name == "n_spins") && cfg.env_kind != EnvKind::Spin)
            fail("sweep axis '" + name + "' requires env.kind = spin");
        if ((name == "p" || name == "r") && cfg.state.general)
            fail("sweep axis '" + name + "' requires a Werner state");
        if (name == "n_spins")
            for (double v : vals)
                if (v < 1.0 || v != std::floor(v))
                    fail("'sweep.n_spins' values must be integers >= 1");
        cfg.axes.push_back(SweepAxis{name, std::move(vals)});
    }

    cfg.run.cycles = static_cast<int>(r.count("run.cycles", 1));
    if (cfg.run.cycles < 1) fail("'run.cycles' must be >= 1");
    if (r.has("run.outputs")) {
        cfg.run.outputs.clear();
        for (const auto& name : r.word_list("run.outputs"))
            cfg.run.outputs.push_back(parse_output(name));
        if (cfg.run.outputs.empty()) fail("'run.outputs' must not be empty");
    }
    const std::string method = r.word("run.method", "reduced");
    if (method == "reduced")
        cfg.run.method = PhaseMethod::Reduced;
    else if (method == "kinematic")
        cfg.run.method = PhaseMethod::Kinematic;
    else
        fail("'run.method' must be reduced or kinematic");
    cfg.run.samples_per_cycle = r.count("run.samples_per_cycle", 2001);
    if (cfg.run.samples_per_cycle < 500) fail("'run.samples_per_cycle' must be >= 500");
    cfg.run.seed = r.count("run.seed", 0);
    cfg.run.workers = static_cast<unsigned>(r.count("run.workers", 0));

    cfg.time.cycles = r.number("time.cycles", 1.0);
    if (!(cfg.time.cycles > 0.0)) fail("'time.cycles' must be > 0");
    cfg.time.samples = r.count("time.samples", 501);
    if (cfg.time.samples < 2) fail("'time.samples' must be >= 2");

    r.reject_unconsumed();

    // Statically known spin baths are built once here so that impossible
    // parameter combinations (h = 0 together with a vanishing coupling sum)
    // are rejected at parse time rather than per row.
    if (cfg.env_kind == EnvKind::Spin && !cfg.spin.random) {
        bool swept = false;
        for (const auto& a : cfg.axes)
            if (a.name == "lambda_over_h" || a.name == "n_spins") swept = true;
        if (!swept) {
            const double lam = cfg.spin.lam             ? *cfg.spin.lam
                               : cfg.spin.lambda_over_h ? *cfg.spin.lambda_over_h * cfg.spin.h
                                                        : 0.0;
            const double eps = cfg.spin.eps          ? *cfg.spin.eps
                               : cfg.spin.eps_over_h ? *cfg.spin.eps_over_h * cfg.spin.h
                                                     : lam;
            try {
                spin_env::SpinBathSpec::homogeneous(cfg.spin.n_spins, cfg.spin.h, eps, lam)
                    .validate();
            } catch (const error& e) {
                fail(std::string("env.spin: ") + e.what());
            }
        }
    }

    return cfg;
}

ExperimentConfig parse_config_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw config_error("config: cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

} // namespace bigeo::sweep
