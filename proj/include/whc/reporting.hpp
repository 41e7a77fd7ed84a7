// reporting.hpp — human (text) and machine (JSON) serialization for reports.
// Structured output uses insertion-ordered keys and no volatile fields
// (timings stay in the text form), so identical inputs produce identical
// bytes. Vertex labels in all output are the 1-based x1..xn / y1..yn.
#pragma once

#include <iomanip>
#include <sstream>
#include <string>

#include "json.hpp"

#include "whc/closure.hpp"
#include "whc/conditions.hpp"
#include "whc/enumeration.hpp"
#include "whc/graph_io.hpp"
#include "whc/oracle.hpp"
#include "whc/spectral.hpp"

namespace whc {

enum class ReportFormat { Text, Structured };

inline std::optional<ReportFormat> report_format_from_name(std::string_view name) {
    if (name == "text") return ReportFormat::Text;
    if (name == "structured") return ReportFormat::Structured;
    return std::nullopt;
}

namespace detail {

using Json = nlohmann::ordered_json;

inline std::string x_label(int i) { return "x" + std::to_string(i + 1); }
inline std::string y_label(int j) { return "y" + std::to_string(j + 1); }

// Vertex id as used by oracle paths: v < n is x_v, otherwise y_{v-n}.
inline std::string vertex_label(int v, int n) {
    return v < n ? x_label(v) : y_label(v - n);
}

inline Json cross_pair_json(const std::pair<int, int>& p) {
    return Json::array({p.first + 1, p.second + 1});
}

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

inline Json estimate_json(const EigenEstimate& est) {
    Json j;
    j["value"] = est.value;
    j["iterations"] = est.iterations;
    j["residual"] = est.residual;
    j["tolerance"] = est.tolerance;
    j["converged"] = est.converged;
    return j;
}

inline Json bound_json(const BoundCheck& b) {
    Json j;
    j["applicable"] = b.applicable;
    if (b.applicable) {
        j["bound"] = b.bound;
        j["holds"] = b.holds;
    }
    return j;
}

} // namespace detail

// ---------------------------------------------------------------------- check

inline std::string emit_report(const ConditionReport& r, ReportFormat format) {
    using detail::Json;
    if (format == ReportFormat::Structured) {
        Json j;
        j["graph"]["n"] = r.n;
        j["graph"]["e"] = r.edge_count;
        j["graph"]["delta"] = r.min_degree;
        j["graph"]["sigma"] = r.sigma ? Json(*r.sigma) : Json(nullptr);
        j["graph"]["degree_sequence"] = r.degree_sequence;
        j["verdicts"] = Json::array();
        for (const auto& v : r.verdicts) {
            Json jv;
            jv["id"] = condition_name(v.id);
            jv["applicable"] = v.applicable;
            jv["satisfied"] = v.satisfied;
            jv["certified"] = v.certified_whc;
            jv["confidence"] = confidence_name(v.confidence);
            jv["detail"] = v.detail;
            j["verdicts"].push_back(jv);
        }
        if (r.oracle_weakly_hc) {
            j["oracle"]["weakly_hc"] = *r.oracle_weakly_hc;
            j["oracle"]["failing_pair"] = r.oracle_failing_pair
                                              ? detail::cross_pair_json(*r.oracle_failing_pair)
                                              : Json(nullptr);
        } else {
            j["oracle"] = nullptr;
        }
        return j.dump(2) + "\n";
    }

    std::ostringstream out;
    out << "graph: n=" << r.n << " e=" << r.edge_count << " delta=" << r.min_degree
        << " sigma=" << (r.sigma ? std::to_string(*r.sigma) : std::string("absent")) << "\n";
    out << "degree sequence:";
    for (int d : r.degree_sequence) out << " " << d;
    out << "\n\n";
    out << std::left << std::setw(26) << "condition" << std::setw(12) << "applicable"
        << std::setw(11) << "satisfied" << std::setw(11) << "certified" << std::setw(19)
        << "confidence" << "detail\n";
    for (const auto& v : r.verdicts) {
        out << std::left << std::setw(26) << condition_name(v.id) << std::setw(12)
            << detail::yes_no(v.applicable) << std::setw(11) << detail::yes_no(v.satisfied)
            << std::setw(11) << detail::yes_no(v.certified_whc) << std::setw(19)
            << confidence_name(v.confidence) << v.detail << "\n";
    }
    if (r.oracle_weakly_hc) {
        out << "\noracle: weakly_hc=" << detail::yes_no(*r.oracle_weakly_hc);
        if (r.oracle_failing_pair)
            out << " failing_pair=(" << detail::x_label(r.oracle_failing_pair->first) << ","
                << detail::y_label(r.oracle_failing_pair->second) << ")";
        out << "\n";
    }
    return out.str();
}

// ---------------------------------------------------------------------- sweep

inline std::string emit_report(const SweepReport& r, ReportFormat format) {
    using detail::Json;
    if (format == ReportFormat::Structured) {
        Json j;
        j["target"] = r.target;
        j["n"] = r.n;
        j["mode"] = r.exhaustive ? "exhaustive" : "random";
        if (!r.exhaustive) {
            j["samples"] = r.samples;
            j["seed"] = r.seed;
        }
        j["min_degree"] = r.min_degree_filter;
        j["total_examined"] = r.total_examined;
        j["certificates"] = Json::object();
        for (const auto& [name, count] : r.certificates) j["certificates"][name] = count;
        j["oracle_calls"] = r.oracle_calls;
        j["qualifying"] = r.qualifying;
        auto dump_list = [](const std::vector<SweepCounterexample>& list) {
            Json arr = Json::array();
            for (const auto& c : list) {
                Json jc;
                jc["index"] = c.index;
                jc["condition"] = c.condition;
                jc["graph"] = c.graph;
                arr.push_back(jc);
            }
            return arr;
        };
        j["violations"] = dump_list(r.violations);
        j["discrepancies"] = dump_list(r.discrepancies);
        j["ok"] = r.ok();
        return j.dump(2) + "\n";
    }

    std::ostringstream out;
    out << "target: " << r.target << "\n";
    out << "n: " << r.n << "  mode: " << (r.exhaustive ? "exhaustive" : "random");
    if (!r.exhaustive) out << "  samples: " << r.samples << "  seed: " << r.seed;
    if (r.min_degree_filter > 0) out << "  min_degree: " << r.min_degree_filter;
    out << "\n";
    out << "examined: " << r.total_examined << "\n";
    if (!r.certificates.empty()) {
        out << "certificates:\n";
        for (const auto& [name, count] : r.certificates)
            out << "  " << name << ": " << count << "\n";
    }
    out << "oracle calls: " << r.oracle_calls << "\n";
    if (r.qualifying > 0) out << "qualifying: " << r.qualifying << "\n";
    out << "violations: " << r.violations.size() << "\n";
    for (const auto& c : r.violations)
        out << "  [" << c.condition << "] index " << c.index << "\n" << c.graph;
    if (!r.discrepancies.empty()) {
        out << "discrepancies: " << r.discrepancies.size() << "\n";
        for (const auto& c : r.discrepancies)
            out << "  [" << c.condition << "] index " << c.index << "\n" << c.graph;
    }
    out << std::fixed << std::setprecision(2) << "elapsed: " << r.elapsed_seconds << "s\n";
    return out.str();
}

// --------------------------------------------------------------------- oracle

inline std::string emit_oracle_result(const OracleResult& r, int n, ReportFormat format) {
    using detail::Json;
    if (format == ReportFormat::Structured) {
        Json j;
        j["weakly_hc"] = r.weakly_hc;
        j["failing_pair"] =
            r.failing_pair ? detail::cross_pair_json(*r.failing_pair) : Json(nullptr);
        if (r.witness_paths) {
            Json w = Json::object();
            for (const auto& [pair, path] : *r.witness_paths) {
                Json arr = Json::array();
                for (int v : path) arr.push_back(detail::vertex_label(v, n));
                w[detail::x_label(pair.first) + " " + detail::y_label(pair.second)] = arr;
            }
            j["witness_paths"] = w;
        } else {
            j["witness_paths"] = nullptr;
        }
        return j.dump(2) + "\n";
    }

    std::ostringstream out;
    out << "weakly_hc: " << detail::yes_no(r.weakly_hc) << "\n";
    if (r.failing_pair)
        out << "failing pair: (" << detail::x_label(r.failing_pair->first) << ","
            << detail::y_label(r.failing_pair->second) << ")\n";
    if (r.witness_paths) {
        out << "witness paths:\n";
        for (const auto& [pair, path] : *r.witness_paths) {
            out << "  " << detail::x_label(pair.first) << " -> "
                << detail::y_label(pair.second) << ":";
            for (int v : path) out << " " << detail::vertex_label(v, n);
            out << "\n";
        }
    }
    return out.str();
}

// -------------------------------------------------------------------- closure

inline std::string emit_closure_trace(const ClosureTrace& t, ReportFormat format) {
    using detail::Json;
    if (format == ReportFormat::Structured) {
        Json j;
        j["rounds"] = t.rounds;
        j["added_edges"] = Json::array();
        for (const auto& e : t.added_edges)
            j["added_edges"].push_back(detail::cross_pair_json(e));
        j["closed_graph"] = write_graph_text(t.result);
        j["closed_edge_count"] = t.result.edge_count();
        return j.dump(2) + "\n";
    }

    std::ostringstream out;
    out << "rounds: " << t.rounds << "\n";
    out << "added " << t.added_edges.size() << " edge(s):\n";
    for (const auto& [i, j] : t.added_edges)
        out << "  " << detail::x_label(i) << " " << detail::y_label(j) << "\n";
    out << "closed graph (" << t.result.edge_count() << " edges):\n" << write_graph_text(t.result);
    return out.str();
}

// ------------------------------------------------------------------- spectrum

inline std::string emit_spectral_report(const SpectralBoundsReport& r, ReportFormat format) {
    using detail::Json;
    if (format == ReportFormat::Structured) {
        Json j;
        j["rho"] = detail::estimate_json(r.summary.rho);
        j["q"] = detail::estimate_json(r.summary.q);
        j["bounds"]["rho_upper_sqrt_edges"] = detail::bound_json(r.rho_upper_sqrt_edges);
        j["bounds"]["q_upper_edges_over_n"] = detail::bound_json(r.q_upper_edges_over_n);
        j["bounds"]["rho_lower_min_edge"] = detail::bound_json(r.rho_lower_min_edge);
        j["bounds"]["q_lower_min_edge"] = detail::bound_json(r.q_lower_min_edge);
        return j.dump(2) + "\n";
    }

    std::ostringstream out;
    auto line = [&](const char* name, const EigenEstimate& e) {
        out << name << " = " << detail::fmt(e.value) << " (iterations=" << e.iterations
            << ", residual=" << detail::fmt(e.residual) << ", tol=" << detail::fmt(e.tolerance)
            << ", converged=" << detail::yes_no(e.converged) << ")\n";
    };
    line("rho", r.summary.rho);
    line("q  ", r.summary.q);
    out << "bounds:\n";
    auto bline = [&](const char* name, const BoundCheck& b, const char* rel, double value) {
        out << "  " << std::left << std::setw(24) << name;
        if (!b.applicable)
            out << "n/a\n";
        else
            out << detail::fmt(value) << " " << rel << " " << detail::fmt(b.bound) << "  "
                << (b.holds ? "ok" : "VIOLATED") << "\n";
    };
    bline("rho <= sqrt(e)", r.rho_upper_sqrt_edges, "<=", r.summary.rho.value);
    bline("q <= e/n + n", r.q_upper_edges_over_n, "<=", r.summary.q.value);
    bline("rho >= min edge", r.rho_lower_min_edge, ">=", r.summary.rho.value);
    bline("q >= min edge sum", r.q_lower_min_edge, ">=", r.summary.q.value);
    return out.str();
}

} // namespace whc
