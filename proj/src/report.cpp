#include "runlat/report.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

namespace runlat {

namespace {

nlohmann::json literal_pair_json(const RunSpace& space, const std::pair<int, int>& pair) {
    return nlohmann::json::array(
        {run_literal(space.at(pair.first)), run_literal(space.at(pair.second))});
}

nlohmann::json optional_pair_json(const std::optional<std::pair<std::string, std::string>>& pair) {
    if (!pair) return nullptr;
    return nlohmann::json::array({pair->first, pair->second});
}

}  // namespace

nlohmann::json verdict_to_json(const SpaceAnalysis& analysis) {
    const StructureVerdict& v = analysis.verdict;
    const RunSpace& space = *analysis.space;
    nlohmann::json out{
        {"ordering", ordering_name(analysis.poset->ordering())},
        {"c", space.scale().c()},
        {"n", space.length()},
        {"element_count", space.size()},
        {"cover_edge_count", analysis.poset->cover_edge_count()},
        {"is_total_order", analysis.poset->is_total()},
        {"is_lattice", v.is_lattice},
        {"is_distributive", v.is_distributive},
        {"is_modular", v.is_modular},
        {"is_graded", v.is_graded},
        {"join_irreducible_count", v.join_irreducibles.size()},
    };
    if (v.n5_witness) {
        nlohmann::json witness = nlohmann::json::array();
        for (int e : v.n5_witness->elems) witness.push_back(run_literal(space.at(e)));
        out["n5_witness"] = witness;
    } else {
        out["n5_witness"] = nullptr;
    }
    if (v.lattice_failure) {
        out["not_a_lattice_witness"] =
            literal_pair_json(space, {v.lattice_failure->a, v.lattice_failure->b});
        out["not_a_lattice_missing"] = v.lattice_failure->missing_join ? "join" : "meet";
    }
    return out;
}

nlohmann::json classification_to_json(const ClassificationReport& report) {
    nlohmann::json out{
        {"measure", report.measure},
        {"ordering", ordering_name(report.ordering)},
        {"c", report.c},
        {"n", report.n},
        {"space_is_lattice", report.space_is_lattice},
        {"is_valuation", report.is_valuation},
        {"is_isotone", report.is_isotone},
        {"is_positive", report.is_positive},
        {"witnesses",
         {{"valuation_law", optional_pair_json(report.law_witness)},
          {"isotone", optional_pair_json(report.isotone_witness)},
          {"positive", optional_pair_json(report.positive_witness)}}},
        {"law_pairs_checked", report.law_pairs_checked},
        {"law_pairs_skipped", report.law_pairs_skipped},
        {"tolerance_used", report.tolerance_used},
    };
    if (report.threshold_note) out["threshold_note"] = *report.threshold_note;
    if (report.note) out["note"] = *report.note;
    return out;
}

namespace {

std::pair<std::string, std::string> first_witness(const ClassificationReport& report) {
    if (report.law_witness) return *report.law_witness;
    if (report.isotone_witness) return *report.isotone_witness;
    if (report.positive_witness) return *report.positive_witness;
    return {"", ""};
}

}  // namespace

std::string classification_to_csv(const ClassificationReport& report, bool with_header) {
    std::ostringstream out;
    if (with_header)
        out << "measure,ordering,n,c,is_valuation,is_isotone,is_positive,witness1,witness2\n";
    const auto witness = first_witness(report);
    out << report.measure << ',' << ordering_name(report.ordering) << ',' << report.n << ','
        << report.c << ',' << (report.is_valuation ? "true" : "false") << ','
        << (report.is_isotone ? "true" : "false") << ','
        << (report.is_positive ? "true" : "false") << ',' << witness.first << ','
        << witness.second << '\n';
    return out.str();
}

std::string classification_to_text(const ClassificationReport& report) {
    std::ostringstream out;
    out << report.measure << " on " << ordering_name(report.ordering) << " (c=" << report.c
        << ", n=" << report.n << "):\n";
    auto line = [&](const char* name, bool ok,
                    const std::optional<std::pair<std::string, std::string>>& witness) {
        out << "  " << name << ": " << (ok ? "yes" : "no");
        if (witness) out << "  (witness " << witness->first << ", " << witness->second << ")";
        out << '\n';
    };
    line("valuation", report.is_valuation, report.law_witness);
    line("isotone", report.is_isotone, report.isotone_witness);
    line("positive", report.is_positive, report.positive_witness);
    if (report.threshold_note) out << "  " << *report.threshold_note << '\n';
    if (report.note) out << "  " << *report.note << '\n';
    return out.str();
}

}  // namespace runlat
