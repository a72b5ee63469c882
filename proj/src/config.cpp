#include "confract/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "confract/error.hpp"

namespace confract {

using json = nlohmann::json;

std::vector<double> Axis::points() const
{
    std::vector<double> pts;
    if (count == 1) {
        pts.push_back(min);
        return pts;
    }
    for (int i = 0; i < count; ++i) {
        const double w = static_cast<double>(i) / (count - 1);
        if (log)
            pts.push_back(std::exp(std::log(min) + w * (std::log(max) - std::log(min))));
        else
            pts.push_back(min + w * (max - min));
    }
    // the end point is exact
    pts.back() = max;
    return pts;
}

double RunConfig::param(const std::string& name) const
{
    auto it = params.find(name);
    if (it == params.end())
        throw ConfigError("params." + name + ": missing for system '" + system + "'");
    return it->second;
}

RunConfig preset_config(const std::string& name)
{
    RunConfig c;
    c.grid.y = {0.5, 2, 3, true};
    if (name == "example31" || name == "negative-control") {
        c.system = "example31";
        c.params = {{"a", 2}, {"b", 0.5}};
        c.alpha = 0.6;
        if (name == "negative-control") {
            c.perturb = true;
            c.suite = "conservation";
        }
    } else if (name == "eq3") {
        c.system = "eq3";
        c.params = {{"c", 1}, {"m", 1}, {"n", 4}, {"a1", 0.5}, {"a2", 2}, {"b1", 1}, {"b2", 0.3}};
        c.alpha = 0.5;
    } else if (name == "transformed33") {
        c.system = "transformed33";
        c.params = {{"c", 1}, {"m", 1}, {"n", 4}, {"a1", 0.5}, {"a2", 2}, {"b1", 1}, {"b2", 0.3}};
        c.alpha = 0.5;
        c.transform = "example33";
    } else if (name == "power-transform") {
        c.system = "power-transform";
        c.params = {{"q", 0.5}, {"a_prime", 1}, {"b_prime", 2}};
        c.alpha = 0.8;
        c.transform = "power";
    } else {
        throw ConfigError("preset: unknown preset '" + name + "'");
    }
    return c;
}

std::vector<std::string> preset_names() { return {"example31", "eq3", "transformed33", "power-transform", "negative-control"}; }

namespace {

struct Reader {
    const json& j;
    std::string path;

    [[noreturn]] void fail(const std::string& key, const std::string& what) const
    {
        throw ConfigError(path + (path.empty() ? "" : ".") + key + ": " + what);
    }

    void only(std::initializer_list<const char*> keys) const
    {
        if (!j.is_object())
            throw ConfigError((path.empty() ? std::string("document") : path) + ": expected an object");
        std::set<std::string> allowed(keys.begin(), keys.end());
        for (auto it = j.begin(); it != j.end(); ++it)
            if (!allowed.count(it.key()))
                fail(it.key(), "unknown key");
    }

    bool has(const char* key) const { return j.contains(key); }

    double number(const char* key, double fallback) const
    {
        if (!j.contains(key))
            return fallback;
        const json& v = j.at(key);
        if (!v.is_number())
            fail(key, "expected a number");
        double d = v.get<double>();
        if (!std::isfinite(d))
            fail(key, "expected a finite number");
        return d;
    }

    int integer(const char* key, int fallback) const
    {
        if (!j.contains(key))
            return fallback;
        const json& v = j.at(key);
        if (!v.is_number_integer())
            fail(key, "expected an integer");
        return v.get<int>();
    }

    bool boolean(const char* key, bool fallback) const
    {
        if (!j.contains(key))
            return fallback;
        const json& v = j.at(key);
        if (!v.is_boolean())
            fail(key, "expected true or false");
        return v.get<bool>();
    }

    std::string string(const char* key, const std::string& fallback) const
    {
        if (!j.contains(key))
            return fallback;
        const json& v = j.at(key);
        if (!v.is_string())
            fail(key, "expected a string");
        return v.get<std::string>();
    }

    std::vector<double> numbers(const char* key) const
    {
        const json& v = j.at(key);
        if (!v.is_array())
            fail(key, "expected an array of numbers");
        std::vector<double> out;
        for (const json& e : v) {
            if (!e.is_number())
                fail(key, "expected an array of numbers");
            out.push_back(e.get<double>());
        }
        return out;
    }

    Reader sub(const char* key) const { return {j.at(key), path + (path.empty() ? "" : ".") + key}; }
};

void read_axis(const Reader& r, Axis& axis)
{
    r.only({"min", "max", "count", "spacing"});
    axis.min = r.number("min", axis.min);
    axis.max = r.number("max", axis.max);
    axis.count = r.integer("count", axis.count);
    std::string spacing = r.string("spacing", axis.log ? "log" : "linear");
    if (spacing != "linear" && spacing != "log")
        r.fail("spacing", "expected 'linear' or 'log'");
    axis.log = spacing == "log";
}

OutputFormat parse_format(const std::string& s, const std::string& where)
{
    if (s == "csv")
        return OutputFormat::csv;
    if (s == "json")
        return OutputFormat::json;
    throw ConfigError(where + ": expected 'csv' or 'json', got '" + s + "'");
}

std::string location(const std::string& text, std::size_t byte)
{
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

}  // namespace

void apply_json(RunConfig& cfg, const std::string& text, const std::string& source)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(source + ": parse error at " + location(text, e.byte ? e.byte - 1 : 0));
    }
    Reader r{doc, ""};
    r.only({"preset", "command", "system", "params", "alpha", "grid", "margins", "quadrature", "initial_data",
            "transform", "pushforward", "output", "format", "tolerances", "suite", "perturb", "seed"});

    if (r.has("preset")) {
        std::string cmd = cfg.command;
        cfg = preset_config(r.string("preset", ""));
        cfg.command = cmd;
    }
    cfg.command = r.string("command", cfg.command);
    if (r.has("system")) {
        std::string sys = r.string("system", cfg.system);
        if (sys != cfg.system && !r.has("params"))
            cfg.params.clear();
        cfg.system = sys;
    }
    if (r.has("params")) {
        Reader p = r.sub("params");
        if (!p.j.is_object())
            r.fail("params", "expected an object");
        cfg.params.clear();
        for (auto it = p.j.begin(); it != p.j.end(); ++it)
            cfg.params[it.key()] = p.number(it.key().c_str(), 0);
    }
    cfg.alpha = r.number("alpha", cfg.alpha);
    if (r.has("grid")) {
        Reader g = r.sub("grid");
        g.only({"x", "t", "y"});
        if (g.has("x"))
            read_axis(g.sub("x"), cfg.grid.x);
        if (g.has("t"))
            read_axis(g.sub("t"), cfg.grid.t);
        if (g.has("y"))
            read_axis(g.sub("y"), cfg.grid.y);
    }
    if (r.has("margins")) {
        Reader m = r.sub("margins");
        m.only({"x_min", "t_min"});
        cfg.margins.x_min = m.number("x_min", cfg.margins.x_min);
        cfg.margins.t_min = m.number("t_min", cfg.margins.t_min);
    }
    if (r.has("quadrature")) {
        Reader q = r.sub("quadrature");
        q.only({"abs_tol", "rel_tol", "truncation_threshold", "max_subdivisions"});
        cfg.quadrature.abs_tol = q.number("abs_tol", cfg.quadrature.abs_tol);
        cfg.quadrature.rel_tol = q.number("rel_tol", cfg.quadrature.rel_tol);
        cfg.quadrature.truncation_threshold = q.number("truncation_threshold", cfg.quadrature.truncation_threshold);
        cfg.quadrature.max_subdivisions = q.integer("max_subdivisions", cfg.quadrature.max_subdivisions);
    }
    if (r.has("initial_data")) {
        Reader d = r.sub("initial_data");
        d.only({"kind", "center", "width", "lo", "hi", "ramp", "seed", "direction", "y", "u", "v"});
        InitialDataSpec& s = cfg.initial;
        s.kind = d.string("kind", s.kind);
        s.center = d.number("center", s.center);
        s.width = d.number("width", s.width);
        s.lo = d.number("lo", s.lo);
        s.hi = d.number("hi", s.hi);
        s.ramp = d.number("ramp", s.ramp);
        s.seed = d.integer("seed", s.seed);
        if (d.has("direction")) {
            auto dir = d.numbers("direction");
            if (dir.size() != 2)
                d.fail("direction", "expected two numbers");
            s.direction = {dir[0], dir[1]};
        }
        if (d.has("y"))
            s.ys = d.numbers("y");
        if (d.has("u"))
            s.us = d.numbers("u");
        if (d.has("v"))
            s.vs = d.numbers("v");
    }
    cfg.transform = r.string("transform", cfg.transform);
    cfg.pushforward = r.boolean("pushforward", cfg.pushforward);
    cfg.output = r.string("output", cfg.output);
    if (r.has("format"))
        cfg.format = parse_format(r.string("format", "csv"), "format");
    if (r.has("tolerances")) {
        Reader t = r.sub("tolerances");
        t.only({"residual", "laplace", "conservation", "group_orbit", "composition", "pushforward", "identity",
                "constraint", "coefficients"});
        Tolerances& tol = cfg.tolerances;
        tol.residual = t.number("residual", tol.residual);
        tol.laplace = t.number("laplace", tol.laplace);
        tol.conservation = t.number("conservation", tol.conservation);
        tol.group_orbit = t.number("group_orbit", tol.group_orbit);
        tol.composition = t.number("composition", tol.composition);
        tol.pushforward = t.number("pushforward", tol.pushforward);
        tol.identity = t.number("identity", tol.identity);
        tol.constraint = t.number("constraint", tol.constraint);
        tol.coefficients = t.number("coefficients", tol.coefficients);
    }
    cfg.suite = r.string("suite", cfg.suite);
    cfg.perturb = r.boolean("perturb", cfg.perturb);
    if (r.has("seed")) {
        if (!doc.at("seed").is_number_unsigned())
            r.fail("seed", "expected a non-negative integer");
        cfg.seed = doc.at("seed").get<std::uint64_t>();
    }
}

RunConfig load_config_file(const std::string& path, const RunConfig& base)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError(path + ": cannot open config file");
    std::stringstream ss;
    ss << in.rdbuf();
    RunConfig cfg = base;
    apply_json(cfg, ss.str(), path);
    return cfg;
}

namespace {

Axis parse_axis_flag(const std::string& body, const std::string& name)
{
    std::vector<std::string> parts;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ':'))
        parts.push_back(item);
    if (parts.size() != 3 && parts.size() != 4)
        throw ConfigError("--grid " + name + ": expected min:max:count[:log]");
    Axis a;
    try {
        std::size_t used = 0;
        a.min = std::stod(parts[0], &used);
        if (used != parts[0].size())
            throw std::invalid_argument("trailing");
        a.max = std::stod(parts[1], &used);
        if (used != parts[1].size())
            throw std::invalid_argument("trailing");
        a.count = std::stoi(parts[2], &used);
        if (used != parts[2].size())
            throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
        throw ConfigError("--grid " + name + ": malformed number in '" + body + "'");
    }
    if (parts.size() == 4) {
        if (parts[3] != "log" && parts[3] != "linear")
            throw ConfigError("--grid " + name + ": spacing must be 'log' or 'linear'");
        a.log = parts[3] == "log";
    }
    return a;
}

}  // namespace

void apply_grid_flag(RunConfig& cfg, const std::string& spec)
{
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw ConfigError("--grid: expected axis=min:max:count, got '" + item + "'");
        std::string name = item.substr(0, eq);
        Axis a = parse_axis_flag(item.substr(eq + 1), name);
        if (name == "x")
            cfg.grid.x = a;
        else if (name == "t")
            cfg.grid.t = a;
        else if (name == "y")
            cfg.grid.y = a;
        else
            throw ConfigError("--grid: unknown axis '" + name + "'");
    }
}

void apply_param_flag(RunConfig& cfg, const std::string& spec)
{
    auto eq = spec.find('=');
    if (eq == std::string::npos || eq == 0)
        throw ConfigError("--param: expected name=value, got '" + spec + "'");
    try {
        std::size_t used = 0;
        std::string value = spec.substr(eq + 1);
        double v = std::stod(value, &used);
        if (used != value.size() || !std::isfinite(v))
            throw std::invalid_argument("bad");
        cfg.params[spec.substr(0, eq)] = v;
    } catch (const std::exception&) {
        throw ConfigError("--param: malformed value in '" + spec + "'");
    }
}

namespace {

void validate_axis(const Axis& a, const std::string& name, double floor)
{
    if (a.count < 1)
        throw ConfigError("grid." + name + ".count: grid is empty");
    if (a.count == 1 && a.min != a.max)
        throw ConfigError("grid." + name + ": a single-point axis needs min == max");
    if (a.count >= 2 && !(a.min < a.max))
        throw ConfigError("grid." + name + ": expected min < max");
    if (!(a.min >= floor))
        throw ConfigError("grid." + name + ".min: must be >= " + format_double(floor));
}

void require(const RunConfig& c, std::initializer_list<const char*> names)
{
    for (const char* n : names)
        if (!c.params.count(n))
            throw ConfigError(std::string("params.") + n + ": missing for system '" + c.system + "'");
}

}  // namespace

void validate(const RunConfig& cfg)
{
    static const std::set<std::string> systems{"example31", "eq2", "eq3", "transformed33", "power-transform"};
    if (!systems.count(cfg.system))
        throw ConfigError("system: unknown system '" + cfg.system + "'");
    if (!(cfg.alpha > 0 && cfg.alpha <= 1))
        throw ConfigError("alpha: must satisfy 0 < alpha <= 1");

    if (cfg.system == "example31") {
        require(cfg, {"a", "b"});
        if (!(cfg.param("a") * cfg.param("b") > 0))
            throw ConfigError("params: example31 requires a*b > 0");
    } else if (cfg.system == "eq2" || cfg.system == "eq3" || cfg.system == "transformed33") {
        require(cfg, {"c", "m", "n"});
        if (!(cfg.param("m") * cfg.param("n") > 0))
            throw ConfigError("params: " + cfg.system + " requires m*n > 0");
        if (cfg.system == "eq2")
            require(cfg, {"k"});
        if (cfg.system == "transformed33" || cfg.transform == "example33") {
            require(cfg, {"a1", "a2", "b1", "b2"});
            if (cfg.param("a2") * cfg.param("b1") - cfg.param("a1") * cfg.param("b2") == 0)
                throw ConfigError("params: a2*b1 - a1*b2 must be nonzero");
        }
    } else {
        require(cfg, {"q", "a_prime", "b_prime"});
        if (!(cfg.param("q") < 2))
            throw ConfigError("params.q: the power transformation needs q < 2");
    }

    static const std::set<std::string> transforms{"identity", "example33", "power"};
    if (!transforms.count(cfg.transform))
        throw ConfigError("transform: unknown transformation '" + cfg.transform + "'");

    if (!(cfg.margins.x_min > 0) || !(cfg.margins.t_min > 0))
        throw ConfigError("margins: x_min and t_min must be positive");
    validate_axis(cfg.grid.x, "x", cfg.margins.x_min);
    validate_axis(cfg.grid.t, "t", cfg.margins.t_min);
    validate_axis(cfg.grid.y, "y", 0);
    if (!(cfg.grid.y.min > 0))
        throw ConfigError("grid.y.min: must be positive");
    if (cfg.grid.x.log && !(cfg.grid.x.min > 0))
        throw ConfigError("grid.x: log spacing needs a positive minimum");

    try {
        cfg.quadrature.validate();
    } catch (const Error& e) {
        throw ConfigError(std::string("quadrature: ") + e.what());
    }

    static const std::set<std::string> kinds{"zero", "seed", "gaussian", "bump", "indicator", "table"};
    const InitialDataSpec& d = cfg.initial;
    if (!kinds.count(d.kind))
        throw ConfigError("initial_data.kind: unknown kind '" + d.kind + "'");
    if (d.kind == "gaussian" && !(d.width > 0))
        throw ConfigError("initial_data.width: must be positive");
    if ((d.kind == "bump" || d.kind == "indicator") && !(0 < d.lo && d.lo < d.hi))
        throw ConfigError("initial_data: expected 0 < lo < hi");
    if (d.kind == "indicator" && !(d.ramp > 0 && 2 * d.ramp <= d.hi - d.lo))
        throw ConfigError("initial_data.ramp: must be positive and at most (hi - lo)/2");
    if (d.kind == "seed" && d.seed != 1 && d.seed != 2)
        throw ConfigError("initial_data.seed: must be 1 or 2");
    if (d.kind == "table" && (d.ys.size() < 4 || d.us.size() != d.ys.size() || d.vs.size() != d.ys.size()))
        throw ConfigError("initial_data: a table needs at least 4 samples and equal-length y, u, v");

    static const std::set<std::string> suites{"residual", "laplace", "conservation", "group-orbit", "pushforward", "all"};
    if (!suites.count(cfg.suite))
        throw ConfigError("suite: unknown suite '" + cfg.suite + "'");

    const Tolerances& t = cfg.tolerances;
    for (double v : {t.residual, t.laplace, t.conservation, t.group_orbit, t.composition, t.pushforward, t.identity,
                     t.constraint, t.coefficients})
        if (!(v > 0))
            throw ConfigError("tolerances: every tolerance must be positive");
}

nlohmann::ordered_json to_json(const RunConfig& cfg)
{
    nlohmann::ordered_json j;
    j["command"] = cfg.command;
    j["system"] = cfg.system;
    j["params"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : cfg.params)
        j["params"][k] = v;
    j["alpha"] = cfg.alpha;
    auto axis = [](const Axis& a) {
        return nlohmann::ordered_json{{"min", a.min}, {"max", a.max}, {"count", a.count}, {"spacing", a.log ? "log" : "linear"}};
    };
    j["grid"] = {{"x", axis(cfg.grid.x)}, {"t", axis(cfg.grid.t)}, {"y", axis(cfg.grid.y)}};
    j["margins"] = {{"x_min", cfg.margins.x_min}, {"t_min", cfg.margins.t_min}};
    j["quadrature"] = {{"abs_tol", cfg.quadrature.abs_tol},
                       {"rel_tol", cfg.quadrature.rel_tol},
                       {"truncation_threshold", cfg.quadrature.truncation_threshold},
                       {"max_subdivisions", cfg.quadrature.max_subdivisions}};
    const InitialDataSpec& d = cfg.initial;
    j["initial_data"] = {{"kind", d.kind},   {"center", d.center}, {"width", d.width}, {"lo", d.lo},
                         {"hi", d.hi},       {"ramp", d.ramp},     {"seed", d.seed},
                         {"direction", {d.direction(0), d.direction(1)}}};
    if (d.kind == "table") {
        j["initial_data"]["y"] = d.ys;
        j["initial_data"]["u"] = d.us;
        j["initial_data"]["v"] = d.vs;
    }
    j["transform"] = cfg.transform;
    j["pushforward"] = cfg.pushforward;
    j["output"] = cfg.output;
    j["format"] = cfg.format == OutputFormat::csv ? "csv" : "json";
    const Tolerances& t = cfg.tolerances;
    j["tolerances"] = {{"residual", t.residual},       {"laplace", t.laplace},         {"conservation", t.conservation},
                       {"group_orbit", t.group_orbit}, {"composition", t.composition}, {"pushforward", t.pushforward},
                       {"identity", t.identity},       {"constraint", t.constraint},   {"coefficients", t.coefficients}};
    j["suite"] = cfg.suite;
    j["perturb"] = cfg.perturb;
    j["seed"] = cfg.seed;
    return j;
}

}  // namespace confract
