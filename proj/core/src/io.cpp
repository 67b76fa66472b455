#include "regrank/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace regrank {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        const auto pos = line.find(sep, start);
        if (pos == std::string::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
    return fields;
}

long long parse_int(const std::string& raw, const std::string& path, int line) {
    const std::string s = trim(raw);
    long long value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw ParseError(path, line, "expected an integer, got '" + raw + "'");
    }
    return value;
}

double parse_double(const std::string& raw, const std::string& path, int line) {
    const std::string s = trim(raw);
    try {
        std::size_t consumed = 0;
        const double value = std::stod(s, &consumed);
        if (consumed != s.size()) throw std::invalid_argument(s);
        return value;
    } catch (const std::exception&) {
        throw ParseError(path, line, "expected a number, got '" + raw + "'");
    }
}

std::ifstream open_for_read(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open '" + path + "' for reading");
    }
    return in;
}

std::ofstream open_for_write(const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    return out;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string format_optional(const std::optional<double>& v) {
    return v ? format_double(*v) : "";
}

void finish_write(std::ofstream& out, const std::string& path) {
    out.flush();
    if (!out) {
        throw IoError("write to '" + path + "' failed");
    }
}

}  // namespace

ComparisonDataset read_comparisons(const std::string& path, int n_override) {
    auto in = open_for_read(path);
    std::string line;
    int lineno = 0;
    if (!std::getline(in, line)) {
        throw ParseError(path, 1, "missing header");
    }
    ++lineno;
    if (trim(line) != "i,j,y") {
        throw ParseError(path, lineno, "expected header 'i,j,y'");
    }

    std::vector<Comparison> records;
    int max_index = -1;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        const auto fields = split(line, ',');
        if (fields.size() != 3) {
            throw ParseError(path, lineno, "expected 3 fields");
        }
        const long long i = parse_int(fields[0], path, lineno);
        const long long j = parse_int(fields[1], path, lineno);
        const long long y = parse_int(fields[2], path, lineno);
        if (i < 0 || j < 0) {
            throw ParseError(path, lineno, "negative item index");
        }
        if (i == j) {
            throw ParseError(path, lineno, "self-comparison");
        }
        if (y != 0 && y != 1) {
            throw ParseError(path, lineno, "outcome must be 0 or 1");
        }
        records.push_back({static_cast<int>(i), static_cast<int>(j), static_cast<int>(y)});
        max_index = std::max({max_index, static_cast<int>(i), static_cast<int>(j)});
    }

    int n = max_index + 1;
    if (n_override > 0) {
        if (n_override < n) {
            throw ValidationError("read_comparisons: n override smaller than max index + 1");
        }
        n = n_override;
    }
    if (n < 2) n = 2;  // an empty file still describes a ranking problem
    return ComparisonDataset(n, std::move(records));
}

void write_comparisons(const std::string& path, const ComparisonDataset& data) {
    auto out = open_for_write(path);
    out << "i,j,y\n";
    for (const auto& r : data.records()) {
        out << r.i << ',' << r.j << ',' << r.y << '\n';
    }
    finish_write(out, path);
}

FeatureSet read_features(const std::string& path) {
    auto in = open_for_read(path);
    std::string line;
    int lineno = 0;
    if (!std::getline(in, line)) {
        throw ParseError(path, 1, "missing header");
    }
    ++lineno;
    const auto header = split(trim(line), ',');
    if (header.size() < 2 || trim(header[0]) != "id") {
        throw ParseError(path, lineno, "expected header 'id,f0,f1,...'");
    }
    const std::size_t d = header.size() - 1;

    std::vector<std::pair<int, std::vector<double>>> rows;
    std::set<int> seen;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        const auto fields = split(line, ',');
        if (fields.size() != d + 1) {
            throw ParseError(path, lineno, "ragged row: expected " +
                                               std::to_string(d + 1) + " fields");
        }
        const long long id = parse_int(fields[0], path, lineno);
        if (id < 0) throw ParseError(path, lineno, "negative id");
        if (!seen.insert(static_cast<int>(id)).second) {
            throw ParseError(path, lineno, "duplicate id " + std::to_string(id));
        }
        std::vector<double> values(d);
        for (std::size_t k = 0; k < d; ++k) {
            values[k] = parse_double(fields[k + 1], path, lineno);
            if (!std::isfinite(values[k])) {
                throw ParseError(path, lineno, "non-finite feature value");
            }
        }
        rows.emplace_back(static_cast<int>(id), std::move(values));
    }
    if (rows.empty()) {
        throw ParseError(path, lineno, "no feature rows");
    }
    const int n = static_cast<int>(rows.size());
    for (int id = 0; id < n; ++id) {
        if (!seen.count(id)) {
            throw ValidationError("read_features: missing id " + std::to_string(id));
        }
    }

    Eigen::MatrixXd x(n, static_cast<int>(d));
    for (const auto& [id, values] : rows) {
        for (std::size_t k = 0; k < d; ++k) x(id, static_cast<int>(k)) = values[k];
    }
    return FeatureSet(std::move(x));
}

void write_features(const std::string& path, const FeatureSet& features) {
    auto out = open_for_write(path);
    out << "id";
    for (int k = 0; k < features.dim(); ++k) out << ",f" << k;
    out << '\n';
    for (int i = 0; i < features.size(); ++i) {
        out << i;
        for (int k = 0; k < features.dim(); ++k) {
            out << ',' << format_double(features.points()(i, k));
        }
        out << '\n';
    }
    finish_write(out, path);
}

void write_scores(const std::string& path, const RankingResult& result) {
    auto out = open_for_write(path);
    const int n = static_cast<int>(result.scores.size());
    std::vector<int> rank_of(n);
    for (int pos = 0; pos < n; ++pos) rank_of[result.ranking[pos]] = pos;
    out << "id,score,rank\n";
    for (int i = 0; i < n; ++i) {
        out << i << ',' << format_double(result.scores[i]) << ',' << rank_of[i] << '\n';
    }
    finish_write(out, path);
}

Eigen::VectorXd read_scores(const std::string& path) {
    auto in = open_for_read(path);
    std::string line;
    int lineno = 0;
    if (!std::getline(in, line)) {
        throw ParseError(path, 1, "missing header");
    }
    ++lineno;
    if (trim(line) != "id,score,rank") {
        throw ParseError(path, lineno, "expected header 'id,score,rank'");
    }
    std::vector<double> scores;
    std::set<int> seen;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        const auto fields = split(line, ',');
        if (fields.size() != 3) {
            throw ParseError(path, lineno, "expected 3 fields");
        }
        const long long id = parse_int(fields[0], path, lineno);
        if (id < 0) throw ParseError(path, lineno, "negative id");
        if (!seen.insert(static_cast<int>(id)).second) {
            throw ParseError(path, lineno, "duplicate id");
        }
        if (static_cast<std::size_t>(id) >= scores.size()) scores.resize(id + 1, 0.0);
        scores[static_cast<std::size_t>(id)] = parse_double(fields[1], path, lineno);
    }
    if (scores.size() != seen.size()) {
        throw ValidationError("read_scores: ids must cover 0..n-1");
    }
    Eigen::VectorXd v(static_cast<int>(scores.size()));
    for (std::size_t i = 0; i < scores.size(); ++i) v[static_cast<int>(i)] = scores[i];
    return v;
}

void write_sweep(const std::string& path, const std::vector<SweepRow>& rows) {
    auto out = open_for_write(path);
    out << "m,trial,algorithm,params,kendall_tau,l2_rel_err,test_err\n";
    for (const auto& r : rows) {
        out << r.m << ',' << r.trial << ',' << r.algorithm << ',' << r.params << ','
            << format_optional(r.kendall_tau) << ',' << format_optional(r.l2_rel_err) << ','
            << format_optional(r.test_err) << '\n';
    }
    finish_write(out, path);
}

void write_aggregates(const std::string& path, const std::vector<AggregateRow>& rows) {
    auto out = open_for_write(path);
    out << "m,algorithm,params,trials,kendall_tau_mean,kendall_tau_stderr,"
           "l2_rel_err_mean,l2_rel_err_stderr,test_err_mean,test_err_stderr\n";
    for (const auto& r : rows) {
        out << r.m << ',' << r.algorithm << ',' << r.params << ',' << r.trials << ','
            << format_double(r.kendall_tau_mean) << ',' << format_double(r.kendall_tau_stderr)
            << ',' << format_optional(r.l2_rel_err_mean) << ','
            << format_optional(r.l2_rel_err_stderr) << ',' << format_optional(r.test_err_mean)
            << ',' << format_optional(r.test_err_stderr) << '\n';
    }
    finish_write(out, path);
}

void write_density(const std::string& path, const std::vector<DensityRow>& rows) {
    auto out = open_for_write(path);
    out << "m,matrix,t,zero_fraction\n";
    for (const auto& r : rows) {
        out << r.m << ',' << r.matrix << ',' << r.t << ',' << format_double(r.zero_fraction)
            << '\n';
    }
    finish_write(out, path);
}

void RunConfig::validate() const {
    if (version != 1) {
        throw ValidationError("config: unsupported version " + std::to_string(version));
    }
    static const std::set<std::string> generators = {"random", "linear", "exp-a", "exp-b",
                                                     "clustered"};
    if (!generators.count(generator)) {
        throw ValidationError("config: unknown generator '" + generator + "'");
    }
    if (m_grid.empty()) {
        throw ValidationError("config: m_grid must be nonempty");
    }
    for (std::size_t k = 0; k < m_grid.size(); ++k) {
        if (m_grid[k] <= 0 || (k > 0 && m_grid[k] <= m_grid[k - 1])) {
            throw ValidationError("config: m_grid must be strictly increasing and positive");
        }
    }
    if (repeats < 1) {
        throw ValidationError("config: repeats must be at least 1");
    }
    if (!(test_fraction >= 0.0 && test_fraction < 1.0)) {
        throw ValidationError("config: test_fraction must lie in [0, 1)");
    }
    static const std::set<std::string> algos = {"rc", "lambda-rc", "diffusion-rc",
                                                "decayed-diffusion-rc", "mle"};
    if (algorithms.empty()) {
        throw ValidationError("config: algorithms must be nonempty");
    }
    for (const auto& a : algorithms) {
        if (!algos.count(a)) {
            throw ValidationError("config: unknown algorithm '" + a + "'");
        }
    }
    if (eta_grid.empty() || sigma_grid.empty()) {
        throw ValidationError("config: eta_grid and sigma_grid must be nonempty");
    }
    for (double e : eta_grid) {
        if (!(e > 0.0)) throw ValidationError("config: eta values must be positive");
    }
    for (double s : sigma_grid) {
        if (!(s > 0.0)) throw ValidationError("config: sigma values must be positive");
    }
    if (!(mle_l2 >= 0.0)) {
        throw ValidationError("config: mle_l2 must be nonnegative");
    }
    if (clusters < 1 || cluster_size < 1 || !(separation > 0.0)) {
        throw ValidationError("config: invalid cluster geometry");
    }
    if (power_density_t < 0) {
        throw ValidationError("config: power_density_t must be nonnegative");
    }
    if (output.empty()) {
        throw ValidationError("config: output path prefix is required");
    }
}

RunConfig read_run_config(const std::string& path) {
    auto in = open_for_read(path);
    RunConfig cfg;
    std::string line;
    int lineno = 0;
    bool have_m_grid = false, have_algorithms = false;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ParseError(path, lineno, "expected 'key = value'");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));

        auto parse_list_ll = [&](std::vector<long long>& dst) {
            dst.clear();
            for (const auto& f : split(value, ',')) dst.push_back(parse_int(f, path, lineno));
        };
        auto parse_list_d = [&](std::vector<double>& dst) {
            dst.clear();
            for (const auto& f : split(value, ',')) dst.push_back(parse_double(f, path, lineno));
        };

        if (key == "version") cfg.version = static_cast<int>(parse_int(value, path, lineno));
        else if (key == "seed") cfg.seed = static_cast<std::uint64_t>(parse_int(value, path, lineno));
        else if (key == "n") cfg.n = static_cast<int>(parse_int(value, path, lineno));
        else if (key == "generator") cfg.generator = value;
        else if (key == "m_grid") { parse_list_ll(cfg.m_grid); have_m_grid = true; }
        else if (key == "repeats") cfg.repeats = static_cast<int>(parse_int(value, path, lineno));
        else if (key == "test_fraction") cfg.test_fraction = parse_double(value, path, lineno);
        else if (key == "algorithms") {
            cfg.algorithms.clear();
            for (const auto& f : split(value, ',')) cfg.algorithms.push_back(trim(f));
            have_algorithms = true;
        }
        else if (key == "eta_grid") parse_list_d(cfg.eta_grid);
        else if (key == "sigma_grid") parse_list_d(cfg.sigma_grid);
        else if (key == "mle_l2") cfg.mle_l2 = parse_double(value, path, lineno);
        else if (key == "clusters") cfg.clusters = static_cast<int>(parse_int(value, path, lineno));
        else if (key == "cluster_size") cfg.cluster_size = static_cast<int>(parse_int(value, path, lineno));
        else if (key == "separation") cfg.separation = parse_double(value, path, lineno);
        else if (key == "power_density_t") cfg.power_density_t = static_cast<int>(parse_int(value, path, lineno));
        else if (key == "output") cfg.output = value;
        else {
            throw ValidationError("config: unknown key '" + key + "' (" + path + ":" +
                                  std::to_string(lineno) + ")");
        }
    }
    if (!have_m_grid) {
        throw ValidationError("config: missing required key 'm_grid'");
    }
    if (!have_algorithms) {
        throw ValidationError("config: missing required key 'algorithms'");
    }
    cfg.validate();
    return cfg;
}

}  // namespace regrank
