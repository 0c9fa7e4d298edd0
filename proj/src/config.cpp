#include "config.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "errors.hpp"

namespace b2p1 {

namespace {

struct RawValue {
    std::string value;
    int line = 0;
};

using Section = std::map<std::string, RawValue>;

const std::map<std::string, std::set<std::string>>& schema() {
    static const std::map<std::string, std::set<std::string>> s = {
        {"grid", {"nx", "ny", "Lx", "Ly"}},
        {"params", {"alpha", "beta", "gamma", "delta", "tau"}},
        {"regime", {"case", "surface_tension", "formulation", "st_mode", "form"}},
        {"bathymetry", {"kind", "h0", "peak_x", "modes"}},
        {"initial", {"kind", "amp", "x0", "y0", "sigma", "jx", "jy", "phase", "branch", "file"}},
        {"time", {"dt", "t_end", "snapshot_every", "filter", "dealias"}},
        {"output", {"dir", "csv", "snapshots"}},
    };
    return s;
}

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

class RawConfig {
  public:
    explicit RawConfig(const std::string& text) {
        std::istringstream in(text);
        std::string line, section;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            size_t hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            line = trim(line);
            if (line.empty()) continue;
            if (line.front() == '[') {
                if (line.back() != ']')
                    throw ConfigError("malformed section header '" + line + "'", lineno);
                section = trim(line.substr(1, line.size() - 2));
                if (!schema().count(section))
                    throw ConfigError("unknown section [" + section + "]", lineno);
                sections_[section];  // mark present
                continue;
            }
            size_t eq = line.find('=');
            if (eq == std::string::npos)
                throw ConfigError("expected 'key = value', got '" + line + "'", lineno);
            if (section.empty()) throw ConfigError("key outside any section", lineno);
            std::string key = trim(line.substr(0, eq));
            std::string value = trim(line.substr(eq + 1));
            if (!schema().at(section).count(key)) throw UnknownKey(section, key, lineno);
            auto [it, inserted] = sections_[section].emplace(key, RawValue{value, lineno});
            if (!inserted)
                throw ConfigError("duplicate key [" + section + "] " + key, lineno);
        }
    }

    bool has(const std::string& sec, const std::string& key) const {
        auto it = sections_.find(sec);
        return it != sections_.end() && it->second.count(key);
    }

    const RawValue& get(const std::string& sec, const std::string& key) const {
        auto it = sections_.find(sec);
        if (it != sections_.end()) {
            auto jt = it->second.find(key);
            if (jt != it->second.end()) return jt->second;
        }
        throw MissingKey(sec, key);
    }

    std::string str(const std::string& sec, const std::string& key) const {
        return get(sec, key).value;
    }
    std::string str_or(const std::string& sec, const std::string& key,
                       const std::string& def) const {
        return has(sec, key) ? get(sec, key).value : def;
    }

    double number(const std::string& sec, const std::string& key) const {
        const RawValue& rv = get(sec, key);
        return parse_number(key, rv);
    }
    double number_or(const std::string& sec, const std::string& key, double def) const {
        return has(sec, key) ? number(sec, key) : def;
    }

    int integer(const std::string& sec, const std::string& key) const {
        const RawValue& rv = get(sec, key);
        char* end = nullptr;
        long v = std::strtol(rv.value.c_str(), &end, 10);
        if (rv.value.empty() || *end != '\0')
            throw TypeError(key, rv.value, "integer", rv.line);
        return int(v);
    }
    int integer_or(const std::string& sec, const std::string& key, int def) const {
        return has(sec, key) ? integer(sec, key) : def;
    }

    bool boolean_or(const std::string& sec, const std::string& key, bool def) const {
        if (!has(sec, key)) return def;
        const RawValue& rv = get(sec, key);
        const std::string& v = rv.value;
        if (v == "on" || v == "true" || v == "yes" || v == "1") return true;
        if (v == "off" || v == "false" || v == "no" || v == "0") return false;
        throw TypeError(key, v, "boolean (on/off)", rv.line);
    }

    int line_of(const std::string& sec, const std::string& key) const {
        return has(sec, key) ? get(sec, key).line : 0;
    }

  private:
    static double parse_number(const std::string& key, const RawValue& rv) {
        char* end = nullptr;
        double v = std::strtod(rv.value.c_str(), &end);
        if (rv.value.empty() || *end != '\0')
            throw TypeError(key, rv.value, "number", rv.line);
        return v;
    }

    std::map<std::string, Section> sections_;
};

std::vector<TrigMode> parse_modes(const std::string& text, int line) {
    std::vector<TrigMode> out;
    std::istringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ';')) {
        tok = trim(tok);
        if (tok.empty()) continue;
        TrigMode m;
        std::istringstream f(tok);
        std::string part;
        std::vector<std::string> parts;
        while (std::getline(f, part, ',')) parts.push_back(trim(part));
        if (parts.size() < 3 || parts.size() > 4)
            throw TypeError("modes", tok, "jx,jy,amp[,phase]", line);
        try {
            size_t used = 0;
            m.jx = std::stoi(parts[0], &used);
            if (used != parts[0].size()) throw std::invalid_argument("");
            m.jy = std::stoi(parts[1], &used);
            if (used != parts[1].size()) throw std::invalid_argument("");
            m.amplitude = std::stod(parts[2], &used);
            if (used != parts[2].size()) throw std::invalid_argument("");
            if (parts.size() == 4) {
                m.phase = std::stod(parts[3], &used);
                if (used != parts[3].size()) throw std::invalid_argument("");
            }
        } catch (const std::exception&) {
            throw TypeError("modes", tok, "jx,jy,amp[,phase]", line);
        }
        out.push_back(m);
    }
    if (out.empty()) throw TypeError("modes", text, "jx,jy,amp[,phase] list", line);
    return out;
}

}  // namespace

RunConfig parse_config(const std::string& text) {
    RawConfig raw(text);
    RunConfig cfg;

    try {
        // Evaluate in document order so the first bad value is the one
        // reported (function-argument order is unspecified).
        const int nx = raw.integer("grid", "nx");
        const int ny = raw.integer("grid", "ny");
        const double Lx = raw.number("grid", "Lx");
        const double Ly = raw.number("grid", "Ly");
        cfg.grid = Grid2D(nx, ny, Lx, Ly);
    } catch (const ConfigError&) {
        throw;
    } catch (const Error& e) {
        throw ConfigError(e.what(), raw.line_of("grid", "nx"));
    }

    try {
        const double alpha = raw.number("params", "alpha");
        const double beta = raw.number("params", "beta");
        const double gamma = raw.number("params", "gamma");
        const double delta = raw.number_or("params", "delta", 0.0);
        const double tau = raw.number_or("params", "tau", 0.0);
        cfg.params = SmallParams(alpha, beta, gamma, delta, tau);
    } catch (const ConfigError&) {
        throw;
    } catch (const Error& e) {
        throw ConfigError(e.what(), raw.line_of("params", "alpha"));
    }

    const int case_no = raw.integer("regime", "case");
    const bool with_st = raw.boolean_or("regime", "surface_tension", false);
    try {
        cfg.regime = regime_from_case(case_no, with_st);
    } catch (const Error& e) {
        throw ConfigError(e.what(), raw.line_of("regime", "case"));
    }

    {
        const std::string v = raw.str_or("regime", "formulation", "pair");
        if (v == "pair") cfg.formulation = Formulation::Pair;
        else if (v == "scalar") cfg.formulation = Formulation::Scalar;
        else throw TypeError("formulation", v, "pair|scalar", raw.line_of("regime", "formulation"));
    }
    {
        const std::string v = raw.str_or("regime", "st_mode", "approx");
        if (v == "approx") cfg.st_mode = SurfaceTensionMode::Approx;
        else if (v == "exact") cfg.st_mode = SurfaceTensionMode::Exact;
        else throw TypeError("st_mode", v, "exact|approx", raw.line_of("regime", "st_mode"));
    }
    {
        const std::string v = raw.str_or("regime", "form", "consistent");
        if (v == "consistent") cfg.form = EquationForm::Consistent;
        else if (v == "printed") cfg.form = EquationForm::Printed;
        else throw TypeError("form", v, "consistent|printed", raw.line_of("regime", "form"));
    }

    {
        const std::string v = raw.str_or("bathymetry", "kind", "flat");
        if (v == "flat") cfg.bathymetry.kind = BathymetryKind::Flat;
        else if (v == "tent") cfg.bathymetry.kind = BathymetryKind::PiecewiseLinearX;
        else if (v == "trig") cfg.bathymetry.kind = BathymetryKind::TrigPolynomial;
        else throw TypeError("kind", v, "flat|tent|trig", raw.line_of("bathymetry", "kind"));
        cfg.bathymetry.h0 = raw.number_or("bathymetry", "h0", 0.0);
        cfg.bathymetry.peak_x = raw.number_or("bathymetry", "peak_x", -1.0);
        if (cfg.bathymetry.kind == BathymetryKind::TrigPolynomial)
            cfg.bathymetry.modes = parse_modes(raw.str("bathymetry", "modes"),
                                               raw.line_of("bathymetry", "modes"));
        else if (raw.has("bathymetry", "modes"))
            throw ConfigError("modes only applies to kind = trig",
                              raw.line_of("bathymetry", "modes"));
    }

    {
        const std::string v = raw.str_or("initial", "kind", "gaussian");
        if (v == "gaussian") cfg.initial.kind = InitialKind::Gaussian;
        else if (v == "plane-wave") cfg.initial.kind = InitialKind::PlaneWave;
        else if (v == "soliton-line") cfg.initial.kind = InitialKind::SolitonLine;
        else if (v == "file") cfg.initial.kind = InitialKind::File;
        else throw TypeError("kind", v, "gaussian|plane-wave|soliton-line|file",
                             raw.line_of("initial", "kind"));
        cfg.initial.amp = raw.number_or("initial", "amp", 0.01);
        cfg.initial.x0 = raw.number_or("initial", "x0", -1.0);
        cfg.initial.y0 = raw.number_or("initial", "y0", -1.0);
        cfg.initial.sigma = raw.number_or("initial", "sigma", -1.0);
        cfg.initial.jx = raw.integer_or("initial", "jx", 1);
        cfg.initial.jy = raw.integer_or("initial", "jy", 0);
        cfg.initial.phase = raw.number_or("initial", "phase", 0.0);
        cfg.initial.branch = raw.integer_or("initial", "branch", +1);
        if (cfg.initial.branch != 1 && cfg.initial.branch != -1)
            throw TypeError("branch", raw.str("initial", "branch"), "+1 or -1",
                            raw.line_of("initial", "branch"));
        if (cfg.initial.kind == InitialKind::File)
            cfg.initial.file = raw.str("initial", "file");
        else if (raw.has("initial", "file"))
            throw ConfigError("file only applies to kind = file", raw.line_of("initial", "file"));
    }

    cfg.time.t_end = raw.number("time", "t_end");
    cfg.time.dt = raw.number_or("time", "dt", -1.0);
    if (cfg.time.dt == 0.0 || (raw.has("time", "dt") && cfg.time.dt < 0.0))
        throw TypeError("dt", raw.str("time", "dt"), "positive number", raw.line_of("time", "dt"));
    cfg.time.snapshot_every = raw.integer_or("time", "snapshot_every", 0);
    cfg.time.filter = raw.number_or("time", "filter", 0.0);
    cfg.time.dealias = raw.boolean_or("time", "dealias", true);

    cfg.output.dir = raw.str_or("output", "dir", "out");
    cfg.output.csv = raw.boolean_or("output", "csv", true);
    cfg.output.snapshots = raw.boolean_or("output", "snapshots", true);

    cfg.warnings = validate_regime(cfg.params, cfg.regime).warnings;
    return cfg;
}

RunConfig parse_config_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open config file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

Bathymetry make_bathymetry(const BathymetryConfig& bc, const Grid2D& g) {
    BathymetrySpec spec;
    spec.kind = bc.kind;
    spec.h0 = bc.h0;
    spec.tent_peak_x = bc.peak_x;
    spec.modes = bc.modes;
    return Bathymetry::make(spec, g);
}

}  // namespace b2p1
