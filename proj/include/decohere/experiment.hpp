// Copyright 2026 The decohere Authors

// Licensed under the Apache License, Version 2.0 (the License);
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

// http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an AS IS BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <variant>
#include <vector>

#include "json.hpp"

#include "collision.hpp"
#include "config.hpp"
#include "entanglement.hpp"
#include "errors.hpp"
#include "states.hpp"

namespace decohere {

/// K identical collisions (λ, φ) on every qubit.
struct HomogeneousSchedule {
    int K = 1;
    double lambda = 1.0;
    double phi = 0.0;
};

enum class SweepParameter { Lambda, K, NQubits };

struct Sweep {
    SweepParameter parameter;
    std::vector<double> values;
};

/// Above this register size every cut list must be given explicitly.
inline constexpr int kMaxAllCutsQubits = 10;

struct ExperimentConfig {
    FamilyKind family = FamilyKind::GHZ;
    int n_qubits = 2;
    std::variant<HomogeneousSchedule, CollisionSchedule> schedule = HomogeneousSchedule{};
    /// P₁ bitmasks (bit i−1 = qubit i); empty optional means every cut.
    std::optional<std::vector<std::uint64_t>> cuts;
    std::optional<Sweep> sweep;
};

struct ResultRow {
    std::string family;
    int n_qubits = 0;
    std::uint64_t cut_bitmask = 0;
    std::string cut_human;
    std::vector<double> gammas;
    double min_eigenvalue = 0.0;
    double negativity_sum = 0.0;
    std::optional<double> formula_value;
    std::optional<double> abs_error;

    friend bool operator==(const ResultRow &, const ResultRow &) = default;
};

inline constexpr std::string_view kCsvHeader =
    "family,n_qubits,cut_bitmask,cut_human,gammas,min_eigenvalue,negativity_sum,formula_value,abs_error";

// ---------------------------------------------------------------------------
// Config parsing
// ---------------------------------------------------------------------------

namespace detail {

using json = nlohmann::json;

inline void reject_unknown(const json &obj, const std::string &path,
                           std::initializer_list<std::string_view> allowed) {
    for (const auto &[key, _] : obj.items()) {
        bool ok = false;
        for (auto a : allowed) {
            ok = ok || key == a;
        }
        if (!ok) {
            throw ConfigError(path.empty() ? key : path + "." + key, "unknown field");
        }
    }
}

inline const json &require(const json &obj, const std::string &path, const char *key) {
    if (!obj.contains(key)) {
        throw ConfigError(path.empty() ? key : path + "." + key, "missing required field");
    }
    return obj.at(key);
}

inline double as_number(const json &v, const std::string &path) {
    if (!v.is_number()) {
        throw ConfigError(path, "expected a number");
    }
    const double x = v.get<double>();
    if (!std::isfinite(x)) {
        throw ConfigError(path, "expected a finite number");
    }
    return x;
}

inline int as_int(const json &v, const std::string &path) {
    if (!v.is_number_integer()) {
        throw ConfigError(path, "expected an integer");
    }
    return v.get<int>();
}

inline double as_lambda(const json &v, const std::string &path) {
    const double x = as_number(v, path);
    if (!(x >= 0.0 && x <= 1.0)) {
        throw ConfigError(path, "lambda must lie in [0, 1]");
    }
    return x;
}

inline void check_n(int n, const std::string &path) {
    if (n < 2) {
        throw ConfigError(path, "n_qubits must be >= 2");
    }
    if (n > default_config().max_qubits) {
        throw ConfigError(path, "n_qubits exceeds capacity of " +
                                    std::to_string(default_config().max_qubits));
    }
}

inline FamilyKind parse_family(const json &v) {
    if (!v.is_string()) {
        throw ConfigError("family", "expected a string");
    }
    const auto s = v.get<std::string>();
    for (FamilyKind k : {FamilyKind::GHZ, FamilyKind::W, FamilyKind::LinearCluster}) {
        if (s == to_string(k)) {
            return k;
        }
    }
    throw ConfigError("family", "unknown family '" + s + "' (expected GHZ, W or LinearCluster)");
}

inline std::variant<HomogeneousSchedule, CollisionSchedule> parse_schedule(const json &v, int n) {
    if (!v.is_object()) {
        throw ConfigError("schedule", "expected an object");
    }
    if (v.contains("per_qubit")) {
        reject_unknown(v, "schedule", {"per_qubit"});
        const auto &lists = v.at("per_qubit");
        if (!lists.is_array() || static_cast<int>(lists.size()) != n) {
            throw ConfigError("schedule.per_qubit", "expected an array with one list per qubit");
        }
        CollisionSchedule sched(n);
        for (std::size_t i = 0; i < lists.size(); ++i) {
            const std::string qpath = "schedule.per_qubit[" + std::to_string(i) + "]";
            if (!lists[i].is_array()) {
                throw ConfigError(qpath, "expected an array of collisions");
            }
            for (std::size_t j = 0; j < lists[i].size(); ++j) {
                const auto &c = lists[i][j];
                const std::string cpath = qpath + "[" + std::to_string(j) + "]";
                if (!c.is_object()) {
                    throw ConfigError(cpath, "expected an object with lambda and phi");
                }
                reject_unknown(c, cpath, {"lambda", "phi"});
                const double lam = as_lambda(require(c, cpath, "lambda"), cpath + ".lambda");
                const double phi = c.contains("phi") ? as_number(c.at("phi"), cpath + ".phi") : 0.0;
                sched.per_qubit[i].emplace_back(lam, phi);
            }
        }
        return sched;
    }
    reject_unknown(v, "schedule", {"K", "lambda", "phi"});
    HomogeneousSchedule h;
    h.K = as_int(require(v, "schedule", "K"), "schedule.K");
    if (h.K < 0) {
        throw ConfigError("schedule.K", "must be >= 0");
    }
    h.lambda = as_lambda(require(v, "schedule", "lambda"), "schedule.lambda");
    h.phi = v.contains("phi") ? as_number(v.at("phi"), "schedule.phi") : 0.0;
    return h;
}

inline std::optional<Sweep> parse_sweep(const json &v) {
    if (!v.is_object()) {
        throw ConfigError("sweep", "expected an object");
    }
    reject_unknown(v, "sweep", {"parameter", "values"});
    const auto &p = require(v, "sweep", "parameter");
    Sweep sw{};
    if (p == "lambda") {
        sw.parameter = SweepParameter::Lambda;
    } else if (p == "K") {
        sw.parameter = SweepParameter::K;
    } else if (p == "n_qubits") {
        sw.parameter = SweepParameter::NQubits;
    } else {
        throw ConfigError("sweep.parameter", "expected one of lambda, K, n_qubits");
    }
    const auto &vals = require(v, "sweep", "values");
    if (!vals.is_array() || vals.empty()) {
        throw ConfigError("sweep.values", "expected a non-empty array");
    }
    for (std::size_t i = 0; i < vals.size(); ++i) {
        const std::string path = "sweep.values[" + std::to_string(i) + "]";
        switch (sw.parameter) {
        case SweepParameter::Lambda:
            sw.values.push_back(as_lambda(vals[i], path));
            break;
        case SweepParameter::K: {
            const int k = as_int(vals[i], path);
            if (k < 0) {
                throw ConfigError(path, "K must be >= 0");
            }
            sw.values.push_back(k);
            break;
        }
        case SweepParameter::NQubits: {
            const int n = as_int(vals[i], path);
            check_n(n, path);
            sw.values.push_back(n);
            break;
        }
        }
        if (i > 0 && !(sw.values[i] > sw.values[i - 1])) {
            throw ConfigError(path, "sweep values must be strictly increasing");
        }
    }
    return sw;
}

inline std::vector<std::uint64_t> parse_cut_list(const json &v, int n) {
    std::set<std::uint64_t> seen;
    std::vector<std::uint64_t> out;
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const std::string path = "cuts[" + std::to_string(i) + "]";
        if (!v[i].is_number_unsigned() && !v[i].is_number_integer()) {
            throw ConfigError(path, "expected an integer bitmask");
        }
        const auto m = v[i].get<std::int64_t>();
        if (m <= 0 || static_cast<std::uint64_t>(m) >= full) {
            throw ConfigError(path, "bitmask must select a nonempty proper subset of the qubits");
        }
        const auto canon = BipartiteCut(n, static_cast<std::uint64_t>(m)).bitmask();
        if (!seen.insert(canon).second) {
            throw ConfigError(path, "duplicate cut");
        }
        out.push_back(canon);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace detail

/// Parse a JSON experiment description. Errors name the offending field, or
/// the parser position for malformed text.
[[nodiscard]] inline ExperimentConfig parse_config(std::string_view text) {
    detail::json doc;
    try {
        doc = detail::json::parse(text);
    } catch (const detail::json::parse_error &e) {
        throw ConfigError("byte " + std::to_string(e.byte), e.what());
    }
    if (!doc.is_object()) {
        throw ConfigError("", "top level must be an object");
    }
    detail::reject_unknown(doc, "", {"family", "n_qubits", "schedule", "cuts", "sweep"});

    ExperimentConfig cfg;
    cfg.family = detail::parse_family(detail::require(doc, "", "family"));
    cfg.n_qubits = detail::as_int(detail::require(doc, "", "n_qubits"), "n_qubits");
    detail::check_n(cfg.n_qubits, "n_qubits");
    cfg.schedule = detail::parse_schedule(detail::require(doc, "", "schedule"), cfg.n_qubits);
    if (doc.contains("sweep")) {
        cfg.sweep = detail::parse_sweep(doc.at("sweep"));
    }

    const bool explicit_schedule = std::holds_alternative<CollisionSchedule>(cfg.schedule);
    if (cfg.sweep && explicit_schedule) {
        throw ConfigError("sweep", "sweeps require a homogeneous schedule");
    }
    const bool n_sweep = cfg.sweep && cfg.sweep->parameter == SweepParameter::NQubits;

    if (doc.contains("cuts")) {
        const auto &c = doc.at("cuts");
        if (c.is_string()) {
            if (c.get<std::string>() != "all") {
                throw ConfigError("cuts", "expected \"all\" or an array of bitmasks");
            }
        } else if (c.is_array()) {
            if (n_sweep) {
                throw ConfigError("cuts", "an n_qubits sweep requires cuts = \"all\"");
            }
            cfg.cuts = detail::parse_cut_list(c, cfg.n_qubits);
        } else {
            throw ConfigError("cuts", "expected \"all\" or an array of bitmasks");
        }
    }
    if (!cfg.cuts) {
        int largest = cfg.n_qubits;
        if (n_sweep) {
            largest = static_cast<int>(cfg.sweep->values.back());
        }
        if (largest > kMaxAllCutsQubits) {
            throw ConfigError("cuts", "warning: " + std::to_string(largest) +
                                          " qubits give 2^(n-1)-1 cuts; list the cuts explicitly");
        }
    }
    return cfg;
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

namespace detail {

inline ResultRow to_row(FamilyKind kind, int n, const AggregateDephasing &agg, const NegativityReport &rep) {
    ResultRow row;
    row.family = std::string(to_string(kind));
    row.n_qubits = n;
    row.cut_bitmask = rep.cut.bitmask();
    row.cut_human = rep.cut.human();
    row.gammas = agg.gamma;
    row.min_eigenvalue = rep.min_eigenvalue;
    row.negativity_sum = rep.negativity_sum;
    row.formula_value = rep.formula_value;
    row.abs_error = rep.abs_error();
    return row;
}

inline CollisionSchedule materialize(const HomogeneousSchedule &h, int n) {
    return CollisionSchedule::homogeneous(n, h.K, h.lambda, h.phi);
}

inline std::vector<ResultRow> evaluate_point(FamilyKind kind, int n, const CollisionSchedule &sched,
                                             const std::optional<std::vector<std::uint64_t>> &cut_bits) {
    const auto agg = schedule_aggregate(sched);
    const auto rho = apply_dephasing(to_density(make_state({kind, n})), agg);
    std::vector<BipartiteCut> cuts;
    if (cut_bits) {
        for (auto m : *cut_bits) {
            cuts.emplace_back(n, m);
        }
    } else {
        cuts = enumerate_cuts(n);
    }
    std::vector<ResultRow> rows;
    rows.reserve(cuts.size());
    for (const auto &cut : cuts) {
        rows.push_back(to_row(kind, n, agg, evaluate_cut(kind, rho, agg, cut)));
    }
    return rows;
}

} // namespace detail

/// Evaluate the configured state and schedule on every requested cut.
[[nodiscard]] inline std::vector<ResultRow> cmd_single(const ExperimentConfig &cfg) {
    if (cfg.sweep) {
        throw ConfigError("sweep", "'single' does not take a sweep block; use 'sweep'");
    }
    const auto sched = std::holds_alternative<HomogeneousSchedule>(cfg.schedule)
                           ? detail::materialize(std::get<HomogeneousSchedule>(cfg.schedule), cfg.n_qubits)
                           : std::get<CollisionSchedule>(cfg.schedule);
    return detail::evaluate_point(cfg.family, cfg.n_qubits, sched, cfg.cuts);
}

/// One block of rows per sweep value, in sweep order.
[[nodiscard]] inline std::vector<ResultRow> sweep_rows(const ExperimentConfig &cfg) {
    if (!cfg.sweep) {
        throw ConfigError("sweep", "missing sweep block");
    }
    const auto &base = std::get<HomogeneousSchedule>(cfg.schedule);
    std::vector<ResultRow> rows;
    for (double v : cfg.sweep->values) {
        HomogeneousSchedule h = base;
        int n = cfg.n_qubits;
        switch (cfg.sweep->parameter) {
        case SweepParameter::Lambda:
            h.lambda = v;
            break;
        case SweepParameter::K:
            h.K = static_cast<int>(v);
            break;
        case SweepParameter::NQubits:
            n = static_cast<int>(v);
            break;
        }
        auto block = detail::evaluate_point(cfg.family, n, detail::materialize(h, n), cfg.cuts);
        rows.insert(rows.end(), std::make_move_iterator(block.begin()), std::make_move_iterator(block.end()));
    }
    return rows;
}

// ---------------------------------------------------------------------------
// CSV
// ---------------------------------------------------------------------------

/// Shortest decimal string that parses back to the same double.
[[nodiscard]] inline std::string format_double(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return {buf, res.ptr};
}

namespace detail {
inline std::string csv_field(const std::string &s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') {
            out += '"';
        }
        out += ch;
    }
    return out + '"';
}
} // namespace detail

inline void write_csv(std::ostream &os, const std::vector<ResultRow> &rows) {
    os << kCsvHeader << '\n';
    for (const auto &r : rows) {
        std::string gammas;
        for (std::size_t i = 0; i < r.gammas.size(); ++i) {
            if (i != 0) {
                gammas += ';';
            }
            gammas += format_double(r.gammas[i]);
        }
        os << detail::csv_field(r.family) << ',' << r.n_qubits << ',' << r.cut_bitmask << ','
           << detail::csv_field(r.cut_human) << ',' << gammas << ',' << format_double(r.min_eigenvalue)
           << ',' << format_double(r.negativity_sum) << ','
           << (r.formula_value ? format_double(*r.formula_value) : "") << ','
           << (r.abs_error ? format_double(*r.abs_error) : "") << '\n';
    }
}

/// Write the rows of a sweep experiment as CSV.
inline void cmd_sweep(const ExperimentConfig &cfg, std::ostream &os) { write_csv(os, sweep_rows(cfg)); }

namespace detail {

inline std::vector<std::string> split_csv_line(const std::string &line) {
    std::vector<std::string> fields(1);
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char ch = line[i];
        if (quoted) {
            if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                fields.back() += '"';
                ++i;
            } else if (ch == '"') {
                quoted = false;
            } else {
                fields.back() += ch;
            }
        } else if (ch == '"') {
            quoted = true;
        } else if (ch == ',') {
            fields.emplace_back();
        } else {
            fields.back() += ch;
        }
    }
    return fields;
}

template <class T> T parse_number(const std::string &s) {
    T v{};
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
        throw InvalidArgumentError("read_csv: bad number '" + s + "'");
    }
    return v;
}

} // namespace detail

/// Inverse of write_csv.
[[nodiscard]] inline std::vector<ResultRow> read_csv(std::istream &is) {
    std::string line;
    if (!std::getline(is, line) || line != kCsvHeader) {
        throw InvalidArgumentError("read_csv: missing or unexpected header");
    }
    std::vector<ResultRow> rows;
    while (std::getline(is, line)) {
        if (line.empty()) {
            continue;
        }
        const auto f = detail::split_csv_line(line);
        if (f.size() != 9) {
            throw InvalidArgumentError("read_csv: expected 9 fields");
        }
        ResultRow r;
        r.family = f[0];
        r.n_qubits = detail::parse_number<int>(f[1]);
        r.cut_bitmask = detail::parse_number<std::uint64_t>(f[2]);
        r.cut_human = f[3];
        std::stringstream gs(f[4]);
        for (std::string g; std::getline(gs, g, ';');) {
            r.gammas.push_back(detail::parse_number<double>(g));
        }
        r.min_eigenvalue = detail::parse_number<double>(f[5]);
        r.negativity_sum = detail::parse_number<double>(f[6]);
        if (!f[7].empty()) {
            r.formula_value = detail::parse_number<double>(f[7]);
        }
        if (!f[8].empty()) {
            r.abs_error = detail::parse_number<double>(f[8]);
        }
        rows.push_back(std::move(r));
    }
    return rows;
}

} // namespace decohere
