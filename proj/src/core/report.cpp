#include "core/report.hpp"

#include <sstream>

namespace stratifold {

using nlohmann::json;

namespace {

json integer_json(const Integer& v) {
    if (fits_int64(v)) return to_int64(v);
    return v.get_str();
}

json edge_json(const StratifoldGraph& g, std::size_t e) {
    const auto& edge = g.edges()[e];
    json out{{"white", edge.white}, {"black", edge.black}, {"label", edge.label}};
    if (edge.sign == EdgeSign::Minus) out["sign"] = "-";
    return out;
}

std::string_view step_name(StepKind k) { return k == StepKind::Step1 ? "step1" : "step2"; }

template <class... Fs>
struct overloaded : Fs... {
    using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

std::string join(const std::vector<std::string>& parts, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
    return out;
}

}  // namespace

json to_json(const AbelianGroup& g) {
    json torsion = json::array();
    for (const auto& d : g.torsion) torsion.push_back(integer_json(d));
    return {{"free_rank", g.free_rank}, {"torsion", torsion}, {"trivial", g.is_trivial()}, {"text", g.to_string()}};
}

json to_json(const ValidationReport& r) {
    json violations = json::array();
    for (const auto& v : r.violations) violations.push_back({{"code", v.code}, {"ref", v.ref}, {"message", v.message}});
    return {{"ok", r.ok()}, {"violations", violations}};
}

json to_json(const ShapeFlags& s) {
    return {{"is_tree", s.is_tree},
            {"is_single_white", s.is_single_white},
            {"is_linear", s.is_linear},
            {"is_trivalent", s.is_trivalent}};
}

json to_json(const ReductionTrace& t) {
    json steps = json::array();
    for (const auto& s : t.steps)
        steps.push_back({{"kind", step_name(s.kind)},
                         {"removed", s.removed_vertices},
                         {"removed_edges", s.removed_edges},
                         {"components", s.resulting_components}});
    json terminal = t.all_whites ? json("all_whites") : json{{"stuck_component", t.stuck_component.value_or("")}};
    return {{"steps", steps}, {"terminal_state", terminal}};
}

json to_json(const Verdict& v, const StratifoldGraph& g, bool include_trace) {
    json witness = std::visit(
        overloaded{
            [](const std::monostate&) { return json(nullptr); },
            [&g](const CycleWitness& w) {
                json edges = json::array();
                for (auto e : w.edges) edges.push_back(edge_json(g, e));
                return json{{"kind", "cycle"}, {"edges", edges}};
            },
            [](const GenusWitness& w) { return json{{"kind", "genus"}, {"white", w.white}, {"genus", w.genus}}; },
            [](const TerminalBlackWitness& w) {
                return json{{"kind", "terminal_black"}, {"black", w.black}, {"label", w.label}};
            },
            [](const GcdViolation& w) {
                return json{{"kind", "gcd_pair"}, {"i", w.i}, {"j", w.j}, {"m_i", w.m_i}, {"n_j", w.n_j}, {"gcd", w.gcd}};
            },
            [](const StuckWitness& w) {
                return json{{"kind", "stuck_component"},
                            {"component", w.component},
                            {"graph", json::parse(canonical_serialize(w.graph))}};
            },
            [](const IntegralHomologyWitness& w) { return json{{"kind", "integral_homology"}, {"group", to_json(w.group)}}; },
            [](const ModHomologyWitness& w) {
                return json{{"kind", "mod_homology"},
                            {"modulus", w.modulus},
                            {"orders", w.orders},
                            {"text", mod_group_string(w.orders)}};
            },
        },
        v.witness);

    json out{{"status", to_string(v.status)},
             {"criterion", to_string(v.criterion)},
             {"theorem", criterion_description(v.criterion)},
             {"witness", witness}};
    if (include_trace && v.trace) out["trace"] = to_json(*v.trace);
    return out;
}

std::string mod_group_string(const std::vector<std::int64_t>& orders) {
    if (orders.empty()) return "0";
    std::vector<std::string> parts;
    for (auto o : orders) parts.push_back("Z" + std::to_string(o));
    return join(parts, " + ");
}

std::string witness_text(const Witness& w, const StratifoldGraph& g) {
    return std::visit(
        overloaded{
            [](const std::monostate&) { return std::string(); },
            [&g](const CycleWitness& c) {
                std::vector<std::string> parts;
                for (auto e : c.edges) {
                    const auto& edge = g.edges()[e];
                    parts.push_back(edge.white + "-" + edge.black + ":" + std::to_string(edge.label));
                }
                return "graph cycle " + join(parts, ", ");
            },
            [](const GenusWitness& x) { return "white " + x.white + " has genus " + std::to_string(x.genus); },
            [](const TerminalBlackWitness& x) {
                return "terminal black " + x.black + " with label " + std::to_string(x.label);
            },
            [](const GcdViolation& x) {
                return "gcd(m" + std::to_string(x.i) + ", n" + std::to_string(x.j) + ") = gcd(" + std::to_string(x.m_i) +
                       ", " + std::to_string(x.n_j) + ") = " + std::to_string(x.gcd);
            },
            [](const StuckWitness& x) { return "stuck component " + x.component; },
            [](const IntegralHomologyWitness& x) { return "H1(X) = " + x.group.to_string(); },
            [](const ModHomologyWitness& x) {
                return "H1(X;Z" + std::to_string(x.modulus) + ") = " + mod_group_string(x.orders);
            },
        },
        w);
}

std::string verdict_text(const Verdict& v, const StratifoldGraph& g) {
    std::string out(to_string(v.status));
    switch (v.status) {
        case Status::SimplyConnected:
            out += " (Theorem: " + std::string(criterion_description(v.criterion)) + ")";
            break;
        case Status::NotSimplyConnected:
            out += " (witness: " + witness_text(v.witness, g) + "; " + std::string(criterion_description(v.criterion)) +
                   ")";
            break;
        case Status::Unknown:
            out += " (" + witness_text(v.witness, g) + "; " + std::string(criterion_description(v.criterion)) + ")";
            break;
    }
    return out;
}

std::string trace_text(const ReductionTrace& t) {
    std::ostringstream out;
    for (std::size_t i = 0; i < t.steps.size(); ++i) {
        const auto& s = t.steps[i];
        out << "  " << (i + 1) << ". " << (s.kind == StepKind::Step1 ? "Step 1" : "Step 2") << ": removed "
            << join(s.removed_vertices, ", ") << " (" << s.removed_edges << " edges) -> components "
            << join(s.resulting_components, ", ") << "\n";
    }
    if (t.all_whites)
        out << "  final: all components are single white vertices\n";
    else
        out << "  final: stuck component " << t.stuck_component.value_or("") << "\n";
    return out.str();
}

std::string validation_text(const ValidationReport& r) {
    if (r.ok()) return "valid\n";
    std::string out = "invalid\n";
    for (const auto& v : r.violations) out += "  [" + v.code + "] " + v.message + "\n";
    return out;
}

}  // namespace stratifold
