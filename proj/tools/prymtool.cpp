#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "prym/document.hpp"
#include "prym/generate.hpp"
#include "prym/prym.hpp"

using nlohmann::json;
using namespace prym;

namespace {

json json_rat_matrix(const RatMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols; ++j) row.push_back(rat_to_string(m.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

json json_int_rows(const std::vector<std::vector<Int>>& rows) {
    json out = json::array();
    for (const auto& r : rows) {
        json row = json::array();
        for (const auto& x : r) row.push_back(x.get_str());
        out.push_back(row);
    }
    return out;
}

json json_edge_set(const EdgeSet& s) { return json(std::vector<std::string>(s.begin(), s.end())); }

json json_polynomial(const VolumePolynomial& p) {
    json out = json::array();
    for (const auto& [mono, coeff] : p.monomials)
        out.push_back({{"edges", mono}, {"coefficient", rat_to_string(coeff)}});
    return out;
}

json json_symbolic_gram(const std::vector<std::vector<LinForm>>& g) {
    json rows = json::array();
    for (const auto& row : g) {
        json jrow = json::array();
        for (const auto& form : row) {
            json entry = json::object();
            for (const auto& [edge, coeff] : form) entry[edge] = rat_to_string(coeff);
            jrow.push_back(entry);
        }
        rows.push_back(jrow);
    }
    return rows;
}

json json_prym(const PrymData& p) {
    json out;
    out["dim"] = p.dim;
    out["ground"] = p.ground;
    out["basis"] = json_int_rows(p.basis);
    out["basisProvenance"] = p.basisProvenance;
    if (p.ogod) out["ogod"] = json_edge_set(*p.ogod);
    out["gram"] = json_rat_matrix(p.gram);
    out["gramRaw"] = json_rat_matrix(p.gramRaw);
    out["detGram"] = rat_to_string(p.detGram);
    out["volumeSquared"] = rat_to_string(p.volumeSquared);
    json pol = json::array();
    for (const auto& x : p.polarizationType) pol.push_back(x.get_str());
    out["polarizationType"] = pol;
    out["dilationIndex"] = p.dilationIndex;
    return out;
}

void flatten(const json& j, const std::string& prefix, std::ostream& os) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items())
            flatten(v, prefix.empty() ? k : prefix + "." + k, os);
    } else if (j.is_array()) {
        std::size_t i = 0;
        for (const auto& v : j) flatten(v, prefix + "[" + std::to_string(i++) + "]", os);
        if (j.empty()) os << prefix << ": []\n";
    } else {
        os << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

struct Output {
    std::string path;    // empty = stdout
    std::string format;  // "json" or "table"

    void emit(const json& report) const {
        std::ostringstream buf;
        if (format == "table")
            flatten(report, "", buf);
        else
            buf << report.dump(2) << "\n";
        if (path.empty()) {
            std::cout << buf.str();
        } else {
            std::ofstream out(path);
            if (!out) throw std::ios_base::failure("cannot open '" + path + "' for writing");
            out << buf.str();
            if (!out) throw std::ios_base::failure("write failed on '" + path + "'");
        }
    }
};

json base_report(const std::string& command) {
    json r;
    r["command"] = command;
    r["warnings"] = json::array();
    return r;
}

json cover_summary(const DoubleCover& c) {
    SignedMatroidView v(c);
    json s;
    s["g"] = base_genus(c);
    s["gTilde"] = total_genus(c);
    s["h"] = v.rank();
    s["d"] = v.dilation_index();
    return s;
}

int run_validate(const std::string& file, const Output& out) {
    DoubleCover c = load_cover_file(file);
    json r = base_report("validate");
    r["file"] = file;
    r["valid"] = true;
    r["summary"] = cover_summary(c);
    out.emit(r);
    return 0;
}

int run_analyze(const std::string& file, const Output& out) {
    DoubleCover c = load_cover_file(file);
    SignedMatroidView v(c);
    json r = base_report("analyze");
    r["file"] = file;
    r["summary"] = cover_summary(c);
    json ogods = json::array();
    for (const auto& og : v.ogods())
        ogods.push_back({{"edges", json_edge_set(og.edges)}, {"index", og.index}});
    r["ogods"] = ogods;
    json circuits = json::array();
    for (const auto& rec : v.circuits_M())
        circuits.push_back({{"edges", json_edge_set(rec.edges)}, {"type", rec.type_tag}});
    r["circuitsM"] = circuits;
    auto small = v.circuits_dual_small();
    r["oneCircuits"] = small.one_circuits;
    json twos = json::array();
    for (const auto& tc : small.two_circuits)
        twos.push_back(
            {{"f1", tc.f1}, {"f2", tc.f2}, {"mult1", tc.mult1}, {"mult2", tc.mult2}});
    r["twoCircuits"] = twos;
    out.emit(r);
    return 0;
}

int run_gram(const std::string& file, const std::vector<std::string>& ogod_edges,
             const Output& out) {
    DoubleCover c = load_cover_file(file);
    SignedMatroidView v(c);
    PrymData p = prym_data(v);
    json r = base_report("gram");
    r["file"] = file;
    r["prym"] = json_prym(p);
    r["gramSymbolic"] = json_symbolic_gram(gram_symbolic(p.basis, p.ground, true));
    r["gramSymbolicRaw"] = json_symbolic_gram(gram_symbolic(p.basis, p.ground, false));
    auto [vol, poly] = prym_volume_ogod(v, c.lengths);
    r["volumeSquaredOgodRoute"] = rat_to_string(vol);
    r["volumePolynomial"] = json_polynomial(poly);
    if (!ogod_edges.empty()) {
        EdgeSet og(ogod_edges.begin(), ogod_edges.end());
        KernelLattice kl = kernel_lattice_for_ogod(v, og);
        json chosen;
        chosen["ogod"] = json_edge_set(og);
        chosen["basis"] = json_int_rows(kl.basis);
        chosen["sublatticeIndex"] = sublattice_index(kernel_lattice(v), kl).get_str();
        r["requestedOgod"] = chosen;
    }
    if (vol != p.volumeSquared) throw std::logic_error("volume routes disagree");
    out.emit(r);
    return 0;
}

int run_simplify(const std::string& file, const std::string& out_path, const Output& out) {
    DoubleCover c = load_cover_file(file);
    SimplifyResult s = simplify(c);
    SimplificationReport rep = verify_simplification_invariance(c);
    json r = base_report("simplify");
    r["file"] = file;
    r["transcript"] = s.transcript;
    json emap = json::object();
    for (const auto& [from, to] : s.edge_map) emap[from] = to;
    r["edgeMap"] = emap;
    r["invarianceVerified"] = rep.ok;
    r["simplified"] = json::parse(serialize_cover_document(s.cover));
    if (!out_path.empty()) write_cover_file(s.cover, out_path);
    out.emit(r);
    if (!rep.ok) {
        std::cerr << "simplification invariance failed: " << rep.detail << "\n";
        return 2;
    }
    return 0;
}

int run_compare(const std::string& file_a, const std::string& file_b, long bound,
                const Output& out) {
    PrymData a = prym_data(SignedMatroidView(load_cover_file(file_a)));
    PrymData b = prym_data(SignedMatroidView(load_cover_file(file_b)));
    CompareResult cr = compare_pryms(a, b, bound);
    json r = base_report("compare");
    r["fileA"] = file_a;
    r["fileB"] = file_b;
    switch (cr.verdict) {
        case CompareVerdict::EqualGram: r["verdict"] = "equal-gram"; break;
        case CompareVerdict::Congruent: r["verdict"] = "congruent"; break;
        case CompareVerdict::Distinct: r["verdict"] = "distinct"; break;
        case CompareVerdict::Undecided: r["verdict"] = "undecided"; break;
    }
    if (!cr.witness.empty()) r["witness"] = cr.witness;
    if (cr.transform) {
        json rows = json::array();
        for (std::size_t i = 0; i < cr.transform->rows; ++i) {
            json row = json::array();
            for (std::size_t j = 0; j < cr.transform->cols; ++j)
                row.push_back(cr.transform->at(i, j).get_str());
            rows.push_back(row);
        }
        r["transform"] = rows;
    }
    r["gramA"] = json_rat_matrix(a.gram);
    r["gramB"] = json_rat_matrix(b.gram);
    out.emit(r);
    return 0;
}

int run_fuzz(std::uint64_t seed, long trials, std::size_t max_edges, const Output& out) {
    std::mt19937_64 rng(seed);
    GeneratorOptions opts;
    opts.max_edges = max_edges;
    json r = base_report("fuzz");
    r["seed"] = seed;
    r["trials"] = trials;
    long failures = 0;
    json failed = json::array();
    for (long t = 0; t < trials; ++t) {
        try {
            DoubleCover c = random_cover(rng, opts);
            SignedMatroidView v(c);
            if (v.rank() != total_genus(c) - base_genus(c))
                throw std::logic_error("rank law violated");
            PrymData p = prym_data(v);
            auto [vol, poly] = prym_volume_ogod(v, c.lengths);
            if (vol != p.volumeSquared) throw std::logic_error("volume identity violated");
            if (!(prym_from_matroid(extract_package(v)) == p))
                throw std::logic_error("matroid reconstruction disagrees");
            Orientation o = random_orientation(rng, c);
            if (!(prym_data(SignedMatroidView(c, o)) == p))
                throw std::logic_error("reorientation changed the Prym data");
            if (!verify_simplification_invariance(c).ok)
                throw std::logic_error("simplification invariance violated");
        } catch (const std::exception& ex) {
            ++failures;
            failed.push_back({{"trial", t}, {"error", ex.what()}});
        }
    }
    r["failures"] = failures;
    r["failureDetails"] = failed;
    out.emit(r);
    return failures == 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact invariants of harmonic double covers of metric graphs"};
    app.require_subcommand(1);

    Output out;
    out.format = "json";
    app.add_option("--out", out.path, "Write the report to this path instead of stdout");
    app.add_option("--format", out.format, "Report format")
        ->check(CLI::IsMember({"json", "table"}));

    std::string file, file_b, simplified_out;
    std::vector<std::string> ogod_edges;
    std::uint64_t seed = 0;
    long trials = 20, bound = 3;
    std::size_t max_edges = 10;

    auto* validate = app.add_subcommand("validate", "Parse and validate a cover document");
    validate->fallthrough();
    validate->add_option("file", file, "Cover document")->required();

    auto* analyze = app.add_subcommand("analyze", "Matroid data: ogods, circuits, indices");
    analyze->fallthrough();
    analyze->add_option("file", file, "Cover document")->required();

    auto* gram = app.add_subcommand("gram", "Kernel basis, Gram matrix, volumes, polarization");
    gram->fallthrough();
    gram->add_option("file", file, "Cover document")->required();
    gram->add_option("--ogod", ogod_edges, "Report the cycle basis of this ogod (edge ids)");

    auto* simp = app.add_subcommand("simplify", "Simplify the cover and verify invariance");
    simp->fallthrough();
    simp->add_option("file", file, "Cover document")->required();
    simp->add_option("--simplified-out", simplified_out, "Write the simplified document here");

    auto* compare = app.add_subcommand("compare", "Compare the Pryms of two covers");
    compare->fallthrough();
    compare->add_option("fileA", file, "First cover document")->required();
    compare->add_option("fileB", file_b, "Second cover document")->required();
    compare->add_option("--congruence-bound", bound, "Entry bound for the congruence search");

    auto* fuzz = app.add_subcommand("fuzz", "Random covers through the full invariant suite");
    fuzz->fallthrough();
    fuzz->add_option("--seed", seed, "RNG seed");
    fuzz->add_option("--trials", trials, "Number of random covers");
    fuzz->add_option("--max-edges", max_edges, "Edge-count bound for generated covers");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*validate) return run_validate(file, out);
        if (*analyze) return run_analyze(file, out);
        if (*gram) return run_gram(file, ogod_edges, out);
        if (*simp) return run_simplify(file, simplified_out, out);
        if (*compare) return run_compare(file, file_b, bound, out);
        if (*fuzz) return run_fuzz(seed, trials, max_edges, out);
    } catch (const CoverError& ex) {
        std::cerr << "validation error: " << ex.what() << "\n";
        return 1;
    } catch (const std::ios_base::failure& ex) {
        std::cerr << "i/o error: " << ex.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& ex) {
        std::cerr << "validation error: " << ex.what() << "\n";
        return 1;
    } catch (const std::exception& ex) {
        std::cerr << "property failure: " << ex.what() << "\n";
        return 2;
    }
    return 0;
}
