#include "mscbo/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace mscbo {

namespace {

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string trim(const std::string& s) {
    auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) {
        return "";
    }
    auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string current;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    parts.push_back(current);
    return parts;
}

double parse_double(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        double v = std::stod(value, &pos);
        if (pos != value.size()) {
            throw std::invalid_argument("");
        }
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("invalid number '" + value + "' for " + key);
    }
}

int parse_int(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        long v = std::stol(value, &pos);
        if (pos != value.size()) {
            throw std::invalid_argument("");
        }
        return static_cast<int>(v);
    } catch (const std::exception&) {
        throw std::invalid_argument("invalid integer '" + value + "' for " + key);
    }
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        unsigned long long v = std::stoull(value, &pos);
        if (pos != value.size()) {
            throw std::invalid_argument("");
        }
        return static_cast<std::uint64_t>(v);
    } catch (const std::exception&) {
        throw std::invalid_argument("invalid seed '" + value + "' for " + key);
    }
}

bool parse_bool(const std::string& key, const std::string& value) {
    if (value == "true" || value == "1") {
        return true;
    }
    if (value == "false" || value == "0") {
        return false;
    }
    throw std::invalid_argument("invalid boolean '" + value + "' for " + key + " (use true/false)");
}

void require_positive(const std::string& name, double v) {
    if (!(v > 0.0)) {
        throw std::invalid_argument(name + " must be positive");
    }
}

void require_non_negative(const std::string& name, double v) {
    if (v < 0.0) {
        throw std::invalid_argument(name + " must be non-negative");
    }
}

}  // namespace

void apply_config_entry(ExperimentSpec& spec, const std::string& key, const std::string& value) {
    RunConfig& cfg = spec.config;
    PotentialParams& pot = cfg.potential;
    if (key == "problem") {
        if (!is_registered(value)) {
            std::string known;
            for (const auto& n : problem_names()) {
                known += known.empty() ? n : ", " + n;
            }
            throw std::invalid_argument("unknown problem '" + value + "' (known: " + known + ")");
        }
        spec.problem = value;
    } else if (key == "variant") {
        cfg.variant = variant_from_string(value);
    } else if (key == "K") {
        int v = parse_int(key, value);
        if (v < 1) {
            throw std::invalid_argument("K must be at least 1");
        }
        cfg.K = v;
    } else if (key == "N_bar") {
        int v = parse_int(key, value);
        if (v < 1) {
            throw std::invalid_argument("N_bar must be at least 1");
        }
        cfg.N_bar = v;
    } else if (key == "tau") {
        double v = parse_double(key, value);
        require_positive("tau", v);
        cfg.tau = v;
    } else if (key == "T") {
        double v = parse_double(key, value);
        require_positive("T", v);
        cfg.T = v;
    } else if (key == "iters") {
        int v = parse_int(key, value);
        if (v < 1) {
            throw std::invalid_argument("iters must be at least 1");
        }
        cfg.T = static_cast<double>(v) * cfg.tau;
    } else if (key == "drift_coefficient") {
        cfg.drift_coefficient = parse_double(key, value);
    } else if (key == "sigma") {
        double v = parse_double(key, value);
        require_positive("sigma", v);
        cfg.sigma = v;
    } else if (key == "alpha") {
        double v = parse_double(key, value);
        require_positive("alpha", v);
        cfg.alpha = v;
    } else if (key == "beta") {
        double v = parse_double(key, value);
        require_non_negative("beta", v);
        cfg.beta = v;
    } else if (key == "R" || key == "A" || key == "R_f" || key == "A_f") {
        double v = parse_double(key, value);
        require_non_negative(key, v);
        (key == "R" ? pot.R : key == "A" ? pot.A : key == "R_f" ? pot.R_f : pot.A_f) = v;
    } else if (key == "r" || key == "a" || key == "r_f" || key == "a_f") {
        double v = parse_double(key, value);
        require_positive(key, v);
        (key == "r" ? pot.r : key == "a" ? pot.a : key == "r_f" ? pot.r_f : pot.a_f) = v;
    } else if (key == "cutoff_f") {
        double v = value == "inf" ? std::numeric_limits<double>::infinity()
                                  : parse_double(key, value);
        require_positive("cutoff_f", v);
        pot.cutoff_f = v;
    } else if (key == "R_c") {
        double v = parse_double(key, value);
        require_non_negative("R_c", v);
        cfg.R_c = v;
    } else if (key == "r_c") {
        double v = parse_double(key, value);
        require_positive("r_c", v);
        cfg.r_c = v;
    } else if (key == "eps_dom") {
        double v = parse_double(key, value);
        require_non_negative("eps_dom", v);
        cfg.eps_dom = v;
    } else if (key == "weight_scale") {
        double v = parse_double(key, value);
        require_non_negative("weight_scale", v);
        cfg.weight_scale = v;
    } else if (key == "neighbor_only") {
        cfg.neighbor_only = parse_bool(key, value);
    } else if (key == "weight_init") {
        cfg.weight_init = weight_init_from_string(value);
    } else if (key == "weights") {
        std::vector<std::vector<double>> rows;
        for (const auto& row_text : split(value, ';')) {
            std::vector<double> row;
            for (const auto& item : split(row_text, ',')) {
                row.push_back(parse_double(key, trim(item)));
            }
            rows.push_back(std::move(row));
        }
        cfg.explicit_weights = std::move(rows);
        cfg.weight_init = WeightInit::explicit_list;
    } else if (key == "seed") {
        std::uint64_t base = parse_u64(key, value);
        std::size_t count = std::max<std::size_t>(spec.seeds.size(), 1);
        spec.seeds.clear();
        for (std::size_t i = 0; i < count; ++i) {
            spec.seeds.push_back(base + i);
        }
    } else if (key == "seeds") {
        int count = parse_int(key, value);
        if (count < 1) {
            throw std::invalid_argument("seeds must be at least 1");
        }
        std::uint64_t base = spec.seeds.empty() ? 0 : spec.seeds.front();
        spec.seeds.clear();
        for (int i = 0; i < count; ++i) {
            spec.seeds.push_back(base + static_cast<std::uint64_t>(i));
        }
    } else if (key == "seed_list") {
        std::vector<std::uint64_t> seeds;
        for (const auto& item : split(value, ',')) {
            seeds.push_back(parse_u64(key, trim(item)));
        }
        if (seeds.empty()) {
            throw std::invalid_argument("seed_list must not be empty");
        }
        spec.seeds = std::move(seeds);
    } else if (key == "resolution") {
        int v = parse_int(key, value);
        if (v != 0 && v < 2) {
            throw std::invalid_argument("resolution must be at least 2 (or 0 for the default)");
        }
        spec.resolution = v;
    } else if (key == "out") {
        spec.out_dir = value;
    } else if (key == "hv_ref") {
        std::vector<double> point;
        for (const auto& item : split(value, ',')) {
            point.push_back(parse_double(key, trim(item)));
        }
        spec.hv_ref = std::move(point);
    } else if (key == "emit") {
        spec.emit_front = spec.emit_weights = spec.emit_diagnostics = spec.emit_summary = false;
        for (const auto& raw : split(value, ',')) {
            std::string item = trim(raw);
            if (item == "front_csv") {
                spec.emit_front = true;
            } else if (item == "weights_csv") {
                spec.emit_weights = true;
            } else if (item == "diagnostics_csv") {
                spec.emit_diagnostics = true;
            } else if (item == "summary_json") {
                spec.emit_summary = true;
            } else {
                throw std::invalid_argument(
                    "unknown emit flag '" + item +
                    "' (known: front_csv, weights_csv, diagnostics_csv, summary_json)");
            }
        }
    } else {
        throw std::invalid_argument("unknown config key '" + key + "'");
    }
}

void apply_config(ExperimentSpec& spec, const std::string& text) {
    std::vector<std::pair<std::string, std::string>> entries;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string stripped = trim(line);
        if (stripped.empty() || stripped.front() == '#') {
            continue;
        }
        auto eq = stripped.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("config line " + std::to_string(line_no) +
                                        ": expected key=value, got '" + stripped + "'");
        }
        std::string key = trim(stripped.substr(0, eq));
        std::string value = trim(stripped.substr(eq + 1));
        if (key.empty()) {
            throw std::invalid_argument("config line " + std::to_string(line_no) + ": empty key");
        }
        entries.emplace_back(std::move(key), std::move(value));
    }
    // `iters` depends on the final tau, so translate it after everything else.
    for (const auto& [key, value] : entries) {
        if (key != "iters") {
            apply_config_entry(spec, key, value);
        }
    }
    for (const auto& [key, value] : entries) {
        if (key == "iters") {
            apply_config_entry(spec, key, value);
        }
    }
}

ExperimentSpec parse_config(const std::string& text) {
    ExperimentSpec spec;
    apply_config(spec, text);
    return spec;
}

namespace {

bool operator==(const PotentialParams& a, const PotentialParams& b) {
    return a.R == b.R && a.r == b.r && a.A == b.A && a.a == b.a && a.R_f == b.R_f &&
           a.r_f == b.r_f && a.A_f == b.A_f && a.a_f == b.a_f && a.cutoff_f == b.cutoff_f;
}

bool equal_config(const RunConfig& a, const RunConfig& b) {
    return a.K == b.K && a.N_bar == b.N_bar && a.tau == b.tau && a.T == b.T &&
           a.drift_coefficient == b.drift_coefficient && a.sigma == b.sigma &&
           a.alpha == b.alpha && a.beta == b.beta && a.potential == b.potential &&
           a.R_c == b.R_c && a.r_c == b.r_c && a.variant == b.variant && a.seed == b.seed &&
           a.weight_init == b.weight_init && a.explicit_weights == b.explicit_weights &&
           a.weight_scale == b.weight_scale && a.neighbor_only == b.neighbor_only &&
           a.eps_dom == b.eps_dom;
}

}  // namespace

bool operator==(const ExperimentSpec& a, const ExperimentSpec& b) {
    return a.problem == b.problem && equal_config(a.config, b.config) && a.seeds == b.seeds &&
           a.resolution == b.resolution && a.out_dir == b.out_dir && a.hv_ref == b.hv_ref &&
           a.emit_front == b.emit_front && a.emit_weights == b.emit_weights &&
           a.emit_diagnostics == b.emit_diagnostics && a.emit_summary == b.emit_summary;
}

std::string serialize_config(const ExperimentSpec& spec) {
    const RunConfig& cfg = spec.config;
    const PotentialParams& pot = cfg.potential;
    std::ostringstream out;
    out << "problem = " << spec.problem << "\n";
    out << "variant = " << to_string(cfg.variant) << "\n";
    out << "K = " << cfg.K << "\n";
    out << "N_bar = " << cfg.N_bar << "\n";
    out << "tau = " << fmt17(cfg.tau) << "\n";
    out << "T = " << fmt17(cfg.T) << "\n";
    out << "drift_coefficient = " << fmt17(cfg.drift_coefficient) << "\n";
    out << "sigma = " << fmt17(cfg.sigma) << "\n";
    out << "alpha = " << fmt17(cfg.alpha) << "\n";
    out << "beta = " << fmt17(cfg.beta) << "\n";
    out << "R = " << fmt17(pot.R) << "\n";
    out << "r = " << fmt17(pot.r) << "\n";
    out << "A = " << fmt17(pot.A) << "\n";
    out << "a = " << fmt17(pot.a) << "\n";
    out << "R_f = " << fmt17(pot.R_f) << "\n";
    out << "r_f = " << fmt17(pot.r_f) << "\n";
    out << "A_f = " << fmt17(pot.A_f) << "\n";
    out << "a_f = " << fmt17(pot.a_f) << "\n";
    out << "cutoff_f = " << (std::isinf(pot.cutoff_f) ? "inf" : fmt17(pot.cutoff_f)) << "\n";
    out << "R_c = " << fmt17(cfg.R_c) << "\n";
    out << "r_c = " << fmt17(cfg.r_c) << "\n";
    out << "eps_dom = " << fmt17(cfg.eps_dom) << "\n";
    out << "weight_scale = " << fmt17(cfg.weight_scale) << "\n";
    out << "neighbor_only = " << (cfg.neighbor_only ? "true" : "false") << "\n";
    out << "weight_init = " << to_string(cfg.weight_init) << "\n";
    if (cfg.weight_init == WeightInit::explicit_list) {
        out << "weights = ";
        for (std::size_t k = 0; k < cfg.explicit_weights.size(); ++k) {
            if (k > 0) {
                out << ";";
            }
            const auto& row = cfg.explicit_weights[k];
            for (std::size_t i = 0; i < row.size(); ++i) {
                if (i > 0) {
                    out << ",";
                }
                out << fmt17(row[i]);
            }
        }
        out << "\n";
    }

    bool contiguous = true;
    for (std::size_t i = 1; i < spec.seeds.size(); ++i) {
        if (spec.seeds[i] != spec.seeds.front() + i) {
            contiguous = false;
            break;
        }
    }
    if (contiguous) {
        out << "seed = " << spec.seeds.front() << "\n";
        out << "seeds = " << spec.seeds.size() << "\n";
    } else {
        out << "seed_list = ";
        for (std::size_t i = 0; i < spec.seeds.size(); ++i) {
            if (i > 0) {
                out << ",";
            }
            out << spec.seeds[i];
        }
        out << "\n";
    }

    out << "resolution = " << spec.resolution << "\n";
    out << "out = " << spec.out_dir << "\n";
    if (!spec.hv_ref.empty()) {
        out << "hv_ref = ";
        for (std::size_t i = 0; i < spec.hv_ref.size(); ++i) {
            if (i > 0) {
                out << ",";
            }
            out << fmt17(spec.hv_ref[i]);
        }
        out << "\n";
    }
    out << "emit = ";
    bool first = true;
    auto add = [&](bool on, const char* name) {
        if (on) {
            out << (first ? "" : ",") << name;
            first = false;
        }
    };
    add(spec.emit_front, "front_csv");
    add(spec.emit_weights, "weights_csv");
    add(spec.emit_diagnostics, "diagnostics_csv");
    add(spec.emit_summary, "summary_json");
    out << "\n";
    return out.str();
}

std::vector<std::string> preset_names() {
    return {"paper-schaffer1", "paper-dent", "paper-schaffer2", "paper-three",
            "paper-weights-demo"};
}

ExperimentSpec preset(const std::string& name) {
    ExperimentSpec spec;
    RunConfig& cfg = spec.config;
    // Shared table settings: 50 iterations of tau=0.1, sharpness alpha=100,
    // purely repulsive potentials.
    cfg.tau = 0.1;
    cfg.T = 5.0;
    cfg.alpha = 100.0;

    if (name == "paper-schaffer1" || name == "paper-dent" || name == "paper-schaffer2") {
        spec.problem = name.substr(6);
        cfg.variant = Variant::full;
        cfg.K = 30;
        cfg.N_bar = 20;
        cfg.weight_init = WeightInit::equidistant;
        // Sampling-noise scale and penalty reach for a well-spread cloud; see
        // the README's reproduction notes.
        cfg.sigma = 0.5;
        cfg.beta = 100.0;
        cfg.R_c = 1.0;
        cfg.r_c = 1.0;
        if (name == "paper-dent") {
            // The dent geometry wants a gentler, shorter-range crowding
            // penalty than the disconnected fronts do.
            cfg.beta = 10.0;
            cfg.r_c = 0.4;
            spec.hv_ref = {4.0, 4.0};
        }
    } else if (name == "paper-three") {
        spec.problem = "three";
        cfg.variant = Variant::full;
        cfg.K = 50;
        cfg.N_bar = 20;
        cfg.weight_init = WeightInit::simplex_uniform;
        cfg.sigma = 0.5;
        cfg.beta = 100.0;
        cfg.R_c = 1.0;
        cfg.r_c = 1.0;
    } else if (name == "paper-weights-demo") {
        spec.problem = "schaffer1";
        cfg.variant = Variant::adaptive;
        cfg.K = 20;
        cfg.N_bar = 50;
        cfg.weight_init = WeightInit::equidistant;
        cfg.sigma = 0.1;
        cfg.beta = 0.0;
    } else {
        std::string known;
        for (const auto& n : preset_names()) {
            known += known.empty() ? n : ", " + n;
        }
        throw std::invalid_argument("unknown preset '" + name + "' (known: " + known + ")");
    }
    return spec;
}

namespace {

std::string weights_csv(const RunResult& result) {
    std::ostringstream out;
    const auto& trace = result.trace;
    std::size_t p = trace.empty() || trace.front().lambda.empty()
                        ? 0
                        : trace.front().lambda.front().size();
    out << "step,swarm";
    for (std::size_t i = 1; i <= p; ++i) {
        out << ",lambda_" << i;
    }
    out << "\n";
    for (const auto& rec : trace) {
        for (std::size_t k = 0; k < rec.lambda.size(); ++k) {
            out << rec.step << "," << k;
            for (double l : rec.lambda[k]) {
                out << "," << fmt17(l);
            }
            out << "\n";
        }
    }
    return out.str();
}

std::string diagnostics_csv(const RunResult& result, int dim) {
    std::ostringstream out;
    out << "step,swarm,V,M";
    for (int c = 1; c <= dim; ++c) {
        out << ",E_" << c;
    }
    out << "\n";
    for (const auto& rec : result.trace) {
        for (std::size_t k = 0; k < rec.diag.V.size(); ++k) {
            out << rec.step << "," << k << "," << fmt17(rec.diag.V[k]) << ","
                << fmt17(rec.diag.M[k]);
            for (double e : rec.diag.E[k]) {
                out << "," << fmt17(e);
            }
            out << "\n";
        }
    }
    return out.str();
}

void write_file(const std::filesystem::path& path, const std::string& content,
                std::vector<std::string>& files) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    }
    out << content;
    if (!out) {
        throw std::runtime_error("failed writing '" + path.string() + "'");
    }
    files.push_back(path.string());
}

std::string report_json(const ExperimentSpec& spec, std::uint64_t seed,
                        const IndicatorReport& rep) {
    std::ostringstream out;
    out << "{\n";
    out << "  \"problem\": \"" << spec.problem << "\",\n";
    out << "  \"variant\": \"" << to_string(spec.config.variant) << "\",\n";
    out << "  \"seed\": " << seed << ",\n";
    out << "  \"gd\": " << fmt17(rep.gd) << ",\n";
    out << "  \"igd\": " << fmt17(rep.igd) << ",\n";
    out << "  \"hv\": " << fmt17(rep.hv) << ",\n";
    out << "  \"ni\": " << rep.ni << "\n";
    out << "}\n";
    return out.str();
}

std::string summary_json(const ExperimentSpec& spec, const ExperimentOutcome& outcome) {
    std::ostringstream out;
    const double n = static_cast<double>(outcome.per_seed.size());
    double ni_mean = 0.0;
    for (const auto& s : outcome.per_seed) {
        ni_mean += static_cast<double>(s.report.ni) / n;
    }
    double ni_sd = 0.0;
    if (outcome.per_seed.size() > 1) {
        for (const auto& s : outcome.per_seed) {
            double d = static_cast<double>(s.report.ni) - ni_mean;
            ni_sd += d * d;
        }
        ni_sd = std::sqrt(ni_sd / (n - 1.0));
    }
    auto list = [&](auto getter) {
        std::ostringstream items;
        for (std::size_t i = 0; i < outcome.per_seed.size(); ++i) {
            if (i > 0) {
                items << ", ";
            }
            items << getter(outcome.per_seed[i]);
        }
        return items.str();
    };
    out << "{\n";
    out << "  \"problem\": \"" << spec.problem << "\",\n";
    out << "  \"variant\": \"" << to_string(spec.config.variant) << "\",\n";
    out << "  \"seeds\": [" << list([](const SeedOutcome& s) { return std::to_string(s.seed); })
        << "],\n";
    out << "  \"gd\": [" << list([](const SeedOutcome& s) { return fmt17(s.report.gd); })
        << "],\n";
    out << "  \"igd\": [" << list([](const SeedOutcome& s) { return fmt17(s.report.igd); })
        << "],\n";
    out << "  \"hv\": [" << list([](const SeedOutcome& s) { return fmt17(s.report.hv); })
        << "],\n";
    out << "  \"ni\": [" << list([](const SeedOutcome& s) { return std::to_string(s.report.ni); })
        << "],\n";
    out << "  \"mean\": {\"gd\": " << fmt17(outcome.mean.gd) << ", \"igd\": "
        << fmt17(outcome.mean.igd) << ", \"hv\": " << fmt17(outcome.mean.hv)
        << ", \"ni\": " << fmt17(ni_mean) << "},\n";
    out << "  \"stddev\": {\"gd\": " << fmt17(outcome.stddev.gd) << ", \"igd\": "
        << fmt17(outcome.stddev.igd) << ", \"hv\": " << fmt17(outcome.stddev.hv)
        << ", \"ni\": " << fmt17(ni_sd) << "}\n";
    out << "}\n";
    return out.str();
}

}  // namespace

std::string front_csv(const ParetoApproximation& approximation, int dim, int objectives) {
    std::ostringstream out;
    out << "swarm,origin,j";
    for (int c = 1; c <= dim; ++c) {
        out << ",x_" << c;
    }
    for (int i = 1; i <= objectives; ++i) {
        out << ",f_" << i;
    }
    out << ",nondominated\n";
    for (std::size_t i = 0; i < approximation.entries.size(); ++i) {
        const auto& e = approximation.entries[i];
        out << e.swarm << "," << (e.origin == Origin::mean ? "mean" : "particle") << ","
            << e.particle;
        for (double x : e.x) {
            out << "," << fmt17(x);
        }
        for (double f : e.fx) {
            out << "," << fmt17(f);
        }
        out << "," << (approximation.nondominated[i] ? 1 : 0) << "\n";
    }
    return out.str();
}

ExperimentOutcome run_experiment(const ExperimentSpec& spec) {
    Problem problem = make_problem(spec.problem);
    validate(spec.config, problem);
    if (spec.seeds.empty()) {
        throw std::invalid_argument("at least one seed is required");
    }
    std::vector<double> ref_point = spec.hv_ref.empty() ? problem.hv_ref : spec.hv_ref;
    if (static_cast<int>(ref_point.size()) != problem.objectives) {
        throw std::invalid_argument("hv_ref must have one entry per objective");
    }

    ReferenceFront reference = reference_front(problem, spec.resolution, spec.config.eps_dom);

    std::filesystem::path dir(spec.out_dir);
    std::filesystem::create_directories(dir);

    ExperimentOutcome outcome;
    for (std::uint64_t seed : spec.seeds) {
        RunConfig cfg = spec.config;
        cfg.seed = seed;
        RunResult result = run(problem, cfg);

        std::vector<std::vector<double>> points;
        points.reserve(result.approximation.entries.size());
        for (const auto& e : result.approximation.entries) {
            points.push_back(e.fx);
        }
        IndicatorReport rep = report(points, reference.points, ref_point, cfg.eps_dom);
        outcome.per_seed.push_back({seed, rep});

        std::string tag = "_seed" + std::to_string(seed);
        if (spec.emit_front) {
            write_file(dir / ("front" + tag + ".csv"),
                       front_csv(result.approximation, problem.dim, problem.objectives),
                       outcome.files_written);
        }
        if (spec.emit_weights) {
            write_file(dir / ("weights" + tag + ".csv"), weights_csv(result),
                       outcome.files_written);
        }
        if (spec.emit_diagnostics) {
            write_file(dir / ("diagnostics" + tag + ".csv"), diagnostics_csv(result, problem.dim),
                       outcome.files_written);
        }
        if (spec.emit_summary) {
            write_file(dir / ("report" + tag + ".json"), report_json(spec, seed, rep),
                       outcome.files_written);
        }
    }

    const double n = static_cast<double>(outcome.per_seed.size());
    double mean_ni = 0.0;
    for (const auto& s : outcome.per_seed) {
        outcome.mean.gd += s.report.gd / n;
        outcome.mean.igd += s.report.igd / n;
        outcome.mean.hv += s.report.hv / n;
        mean_ni += static_cast<double>(s.report.ni) / n;
    }
    outcome.mean.ni = static_cast<int>(std::lround(mean_ni));
    if (outcome.per_seed.size() > 1) {
        double vg = 0.0, vi = 0.0, vh = 0.0, vn = 0.0;
        for (const auto& s : outcome.per_seed) {
            vg += (s.report.gd - outcome.mean.gd) * (s.report.gd - outcome.mean.gd);
            vi += (s.report.igd - outcome.mean.igd) * (s.report.igd - outcome.mean.igd);
            vh += (s.report.hv - outcome.mean.hv) * (s.report.hv - outcome.mean.hv);
            double dn = static_cast<double>(s.report.ni) - mean_ni;
            vn += dn * dn;
        }
        outcome.stddev.gd = std::sqrt(vg / (n - 1.0));
        outcome.stddev.igd = std::sqrt(vi / (n - 1.0));
        outcome.stddev.hv = std::sqrt(vh / (n - 1.0));
        outcome.stddev.ni = static_cast<int>(std::lround(std::sqrt(vn / (n - 1.0))));
    }

    if (spec.emit_summary) {
        write_file(dir / "summary.json", summary_json(spec, outcome), outcome.files_written);
    }
    return outcome;
}

}  // namespace mscbo
