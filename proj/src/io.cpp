#include "minabm/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace minabm {

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

[[noreturn]] void bad_value(std::string_view key, std::string_view value, const char* what) {
    throw std::invalid_argument(std::string(key) + ": " + what + " (got '" + std::string(value) + "')");
}

double to_double(std::string_view key, std::string_view v) {
    const std::string s(v);
    char* end = nullptr;
    const double d = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size()) bad_value(key, v, "expected a number");
    return d;
}

template <class Int>
Int to_int(std::string_view key, std::string_view v) {
    Int out{};
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || ptr != v.data() + v.size()) bad_value(key, v, "expected an integer");
    return out;
}

bool to_bool(std::string_view key, std::string_view v) {
    if (v == "true" || v == "1") return true;
    if (v == "false" || v == "0") return false;
    bad_value(key, v, "expected true or false");
}

struct Field {
    ConfigKey key;
    std::function<std::string(const RunConfig&)> get;
    std::function<void(RunConfig&, std::string_view)> set;
};

#define MINABM_REAL(name, doc, member)                                                           \
    Field {                                                                                      \
        {name, doc}, [](const RunConfig& c) { return format_double(c.member); },                 \
            [](RunConfig& c, std::string_view v) { c.member = to_double(name, v); }              \
    }
#define MINABM_INT(name, doc, member)                                                            \
    Field {                                                                                      \
        {name, doc}, [](const RunConfig& c) { return std::to_string(c.member); },                \
            [](RunConfig& c, std::string_view v) { c.member = to_int<decltype(c.member)>(name, v); } \
    }
#define MINABM_BOOL(name, doc, member)                                                           \
    Field {                                                                                      \
        {name, doc}, [](const RunConfig& c) { return std::string(c.member ? "true" : "false"); }, \
            [](RunConfig& c, std::string_view v) { c.member = to_bool(name, v); }                \
    }

const std::vector<Field>& fields() {
    static const std::vector<Field> table = {
        MINABM_REAL("b", "chartist strength", run.params.b),
        MINABM_REAL("gamma", "fundamentalist reversion rate, in (0,1)", run.params.gamma),
        MINABM_REAL("sigma", "noise scale", run.params.sigma),
        MINABM_INT("M", "moving-average window", run.params.M),
        MINABM_INT("N", "number of agents", run.params.N),
        MINABM_REAL("p_f", "fundamental price", run.params.p_f),
        MINABM_REAL("sigma_pf", "random-walk scale of the fundamental price (0 = constant)", run.params.sigma_pf),
        Field{{"mode", "linear | multiplicative"},
              [](const RunConfig& c) { return std::string(to_string(c.run.params.mode)); },
              [](RunConfig& c, std::string_view v) { c.run.params.mode = parse_dynamics_mode(v); }},
        Field{{"ed_normalization", "by_price | by_reference"},
              [](const RunConfig& c) { return std::string(to_string(c.run.params.ed_normalization)); },
              [](RunConfig& c, std::string_view v) { c.run.params.ed_normalization = parse_ed_normalization(v); }},
        MINABM_REAL("herding.base_rate", "overall switching probability scale", run.params.herding.base_rate),
        MINABM_REAL("herding.epsilon", "spontaneous switching floor", run.params.herding.epsilon),
        MINABM_REAL("herding.bias", "asymmetry favoring fundamentalists, >= 1", run.params.herding.bias),
        Field{{"herding.update", "sweep | single_agent"},
              [](const RunConfig& c) { return std::string(to_string(c.run.params.herding.update)); },
              [](RunConfig& c, std::string_view v) { c.run.params.herding.update = parse_herding_update(v); }},
        MINABM_BOOL("herding.enabled", "false freezes the chartist fraction at x0", run.herding),
        MINABM_BOOL("soi.enabled", "agents enter and leave on volatility thresholds", run.params.soi.enabled),
        MINABM_INT("soi.window", "indicator window length", run.params.soi.window),
        MINABM_REAL("soi.theta_in", "indicator level above which an agent enters", run.params.soi.theta_in),
        MINABM_REAL("soi.theta_out", "indicator level below which an agent leaves", run.params.soi.theta_out),
        MINABM_INT("soi.n_min", "lower bound on N", run.params.soi.n_min),
        MINABM_INT("soi.n_max", "upper bound on N", run.params.soi.n_max),
        MINABM_INT("soi.update_period", "steps between agent-count updates", run.params.soi.update_period),
        MINABM_INT("seed", "random seed", run.seed),
        MINABM_INT("stream", "noise stream id", run.stream),
        MINABM_INT("t_max", "last time step", run.t_max),
        MINABM_INT("warmup", "discarded steps (-1 = 10 max(1/gamma, M))", run.warmup),
        Field{{"p0", "initial price (default = p_f)"},
              [](const RunConfig& c) { return c.run.p0 ? format_double(*c.run.p0) : std::string("default"); },
              [](RunConfig& c, std::string_view v) {
                  if (v == "default") {
                      c.run.p0.reset();
                  } else {
                      c.run.p0 = to_double("p0", v);
                  }
              }},
        MINABM_REAL("x0", "initial chartist fraction", run.x0),
        MINABM_REAL("guard.p_min_ratio", "divergence bound on p/p_f (multiplicative)", run.guard.p_min_ratio),
        MINABM_REAL("guard.p_max_ratio", "divergence bound on p/p_f (multiplicative)", run.guard.p_max_ratio),
        MINABM_INT("record_stride", "keep every k-th sample", run.record_stride),
        MINABM_INT("delta", "return lag for summaries", delta),
        MINABM_INT("feq_bins", "bins of the chartist-fraction histogram", feq_bins),
        Field{{"output_dir", "directory for run artifacts"},
              [](const RunConfig& c) { return c.output_dir; },
              [](RunConfig& c, std::string_view v) { c.output_dir = std::string(v); }},
    };
    return table;
}

#undef MINABM_REAL
#undef MINABM_INT
#undef MINABM_BOOL

const Field& find_field(std::string_view key) {
    for (const Field& f : fields()) {
        if (f.key.name == key) return f;
    }
    throw std::invalid_argument(std::string(key) + ": unknown config key");
}

std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::ofstream open_out(const std::filesystem::path& path) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    return out;
}

}  // namespace

const std::vector<ConfigKey>& config_keys() {
    static const std::vector<ConfigKey> keys = [] {
        std::vector<ConfigKey> k;
        for (const Field& f : fields()) k.push_back(f.key);
        return k;
    }();
    return keys;
}

void set_config_value(RunConfig& config, std::string_view key, std::string_view value) {
    try {
        find_field(key).set(config, trim(value));
    } catch (const std::invalid_argument& e) {
        const std::string msg = e.what();
        if (msg.rfind(std::string(key) + ":", 0) == 0) throw;
        throw std::invalid_argument(std::string(key) + ": " + msg);
    }
}

std::string get_config_value(const RunConfig& config, std::string_view key) {
    return find_field(key).get(config);
}

std::string to_config_text(const RunConfig& config) {
    std::ostringstream out;
    for (const Field& f : fields()) {
        out << "# " << f.key.doc << "\n" << f.key.name << " = " << f.get(config) << "\n";
    }
    return out.str();
}

RunConfig parse_config_text(std::string_view text) {
    RunConfig config;
    int line_no = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw std::invalid_argument("config line " + std::to_string(line_no) + ": expected key = value");
        }
        const std::string_view key = trim(line.substr(0, eq));
        if (key.rfind("result.", 0) == 0) continue;
        set_config_value(config, key, line.substr(eq + 1));
    }
    return config;
}

RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open config " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

void write_series_csv(const std::filesystem::path& path, const PriceSeries& s) {
    std::ofstream out = open_out(path);
    const bool mult = s.mode == DynamicsMode::multiplicative;
    out << "t,p,x,N,p_f" << (mult ? ",ed" : "") << "\n";
    for (std::size_t i = 0; i < s.size(); ++i) {
        out << (s.t0 + static_cast<std::int64_t>(i) * s.stride) << ',' << format_double(s.p[i]) << ','
            << format_double(s.x[i]) << ',' << s.n[i] << ',' << format_double(s.p_f[i]);
        if (mult) out << ',' << format_double(s.ed[i]);
        out << '\n';
    }
}

PriceSeries read_series_csv(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::string line;
    std::getline(in, line);
    PriceSeries s;
    const bool mult = line.find(",ed") != std::string::npos;
    s.mode = mult ? DynamicsMode::multiplicative : DynamicsMode::linear;
    std::vector<std::int64_t> ts;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string cell;
        std::vector<std::string> cells;
        while (std::getline(row, cell, ',')) cells.push_back(cell);
        if (cells.size() < (mult ? 6u : 5u)) throw std::runtime_error("malformed row in " + path.string());
        ts.push_back(std::stoll(cells[0]));
        s.p.push_back(std::stod(cells[1]));
        s.x.push_back(std::stod(cells[2]));
        s.n.push_back(std::stoi(cells[3]));
        s.p_f.push_back(std::stod(cells[4]));
        if (mult) s.ed.push_back(std::stod(cells[5]));
    }
    if (!ts.empty()) s.t0 = ts.front();
    if (ts.size() > 1) s.stride = static_cast<int>(ts[1] - ts[0]);
    return s;
}

void write_manifest(const std::filesystem::path& path, const RunConfig& config,
                    const std::map<std::string, std::string>& results) {
    std::ofstream out = open_out(path);
    out << to_config_text(config);
    for (const auto& [k, v] : results) out << "result." << k << " = " << v << "\n";
}

std::map<std::string, std::string> divergence_results(const DivergenceReport& r) {
    return {{"status", "diverged"},   {"divergence.t", std::to_string(r.t)}, {"divergence.p", format_double(r.p)},
            {"divergence.x", format_double(r.x)}, {"divergence.ed", format_double(r.ed)},
            {"divergence.reason", r.reason}};
}

void write_feq_csv(const std::filesystem::path& path, const PopulationDistribution& feq) {
    std::ofstream out = open_out(path);
    out << "bin_left,bin_right,mass\n";
    for (int i = 0; i < feq.bins(); ++i) {
        out << format_double(feq.edges[i]) << ',' << format_double(feq.edges[i + 1]) << ','
            << format_double(feq.mass[i]) << '\n';
    }
}

void write_validation_csv(const std::filesystem::path& path, const std::vector<ValidationRow>& rows) {
    std::ofstream out = open_out(path);
    out << "quantity,analytic,simulated,std_error,pass,note\n";
    for (const ValidationRow& r : rows) {
        out << r.quantity << ',' << format_double(r.analytic) << ',' << format_double(r.simulated) << ','
            << format_double(r.std_error) << ',' << (r.pass ? "pass" : "fail") << ',' << r.note << '\n';
    }
}

void write_table_csv(const std::filesystem::path& path, const std::vector<std::string>& header,
                     const std::vector<std::vector<double>>& rows) {
    std::ofstream out = open_out(path);
    for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
    out << '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_double(row[i]);
        out << '\n';
    }
}

}  // namespace minabm
