// equilin command-line front end: decompositions, oracle dimensions, closed
// form counts, randomized equivariance verification, and the full report.
//
// Exit codes: 0 ok, 1 verification failure, 2 usage or input error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "equilin/acceptance.hpp"
#include "equilin/deepsets.hpp"
#include "equilin/graph.hpp"
#include "equilin/json_io.hpp"
#include "equilin/layers.hpp"
#include "equilin/oracle.hpp"
#include "equilin/weight_space.hpp"
#include "equilin/wreath.hpp"

namespace {

using equilin::json;

json read_json_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return json::parse(buf.str());
    }
    std::ifstream in(path);
    if (!in) throw equilin::InvalidInputError("cannot open input file: " + path);
    json j;
    in >> j;
    return j;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw equilin::InvalidInputError("cannot open file: " + path);
    json j;
    in >> j;
    return j;
}

void emit(const json& payload) { std::cout << payload.dump(2) << std::endl; }

int fail(const std::string& diagnostic, int code) {
    json j;
    j["status"] = "fail";
    j["diagnostics"] = json::array({diagnostic});
    std::cout << j.dump(2) << std::endl;
    return code;
}

std::vector<int> parse_dims(const std::string& csv) {
    std::vector<int> dims;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) dims.push_back(std::stoi(item));
    return dims;
}

int run_decompose(const std::string& kind, const std::string& in_path) {
    json input = read_json_input(in_path);
    json out;
    if (kind == "vector") {
        equilin::Vec x = input.get<equilin::Vec>();
        equilin::DeepSetsDecomposition d = equilin::decompose_vector(x);
        out["mean_part"] = json(d.mean_part());
        out["residual"] = json(d.residual);
        out["residuals"]["reconstruction"] = equilin::rel_err(d.reconstruct(), x);
        out["residuals"]["residual_sum"] = equilin::vec_sum(d.residual);
    } else if (kind == "graph") {
        equilin::Mat a = equilin::mat_from_json(input);
        if (a.rows == 2) {
            auto parts = equilin::decompose_matrix_n2(a);
            equilin::Mat sum(2, 2);
            for (int i = 0; i < 4; ++i) {
                out["components"]["v" + std::to_string(i)] = equilin::mat_to_json(parts[i]);
                sum = equilin::mat_add(sum, parts[i]);
            }
            out["residuals"]["reconstruction"] = equilin::rel_err(sum, a);
        } else {
            equilin::GraphDecomposition g = equilin::decompose_matrix(a);
            for (int i = 0; i < 7; ++i)
                out["components"]["v" + std::to_string(i)] = equilin::mat_to_json(g.parts[i]);
            out["residuals"]["reconstruction"] = equilin::rel_err(g.reconstruct(), a);
            double scale = std::max(equilin::max_abs(a), 1e-12);
            out["residuals"]["constraints"] =
                equilin::decomposition_constraint_residual(equilin::graph_decomposition(a),
                                                           equilin::graph_iso_table(a.rows)) /
                scale;
        }
    } else if (kind == "dws") {
        equilin::WeightSpacePoint v = equilin::weightspace_from_json(input);
        equilin::Decomposition d = equilin::decompose_weightspace(v);
        json comps = json::array();
        for (const equilin::IrrepComponent& c : d.components) {
            json rec;
            rec["label"] = equilin::label_to_json(c.label);
            rec["slot"] = c.slot;
            rec["data"] = equilin::weightspace_to_json(
                equilin::WeightSpacePoint::unflatten(v.arch, c.data));
            comps.push_back(std::move(rec));
        }
        out["components"] = std::move(comps);
        out["residuals"]["reconstruction"] = equilin::rel_err(d.sum(), v.flatten());
        double scale = std::max(equilin::max_abs(v.flatten()), 1e-12);
        out["residuals"]["constraints"] =
            equilin::decomposition_constraint_residual(d, equilin::dws_iso_table(v.arch)) / scale;
    } else {
        throw equilin::InvalidInputError("decompose: unknown --kind " + kind);
    }
    emit(out);
    return 0;
}

int run_basis_dim(const std::string& spec_path, const std::string& emit_path, bool invariant) {
    equilin::ActionSpec spec = equilin::spec_from_json(read_json_file(spec_path));
    equilin::EquivariantBasis basis =
        invariant ? equilin::invariant_basis(spec) : equilin::equivariant_basis(spec);
    if (!emit_path.empty()) {
        json arr = json::array();
        for (const equilin::Mat& b : basis.basis) arr.push_back(equilin::mat_to_json(b));
        std::ofstream outf(emit_path);
        outf << arr.dump(2) << std::endl;
    }
    json out;
    out["dim"] = basis.dim;
    emit(out);
    return 0;
}

int run_count(const std::string& kind, int n, const std::string& dims_csv,
              const std::string& base_kind, int k, bool oracle) {
    json out;
    if (kind == "ign") {
        out["dim"] = equilin::ign_basis_dim(n);
        if (oracle) {
            out["oracle"] = equilin::equivariant_basis(equilin::ActionSpec::matrix_conj(n)).dim;
            out["match"] = out["dim"] == out["oracle"];
        }
    } else if (kind == "dws") {
        equilin::ArchSpec arch(parse_dims(dims_csv));
        equilin::DwsMultiplicities mult = equilin::dws_multiplicities(arch);
        out["closed_form"] = mult.layer_param_count();
        out["alpha"] = mult.alpha;
        out["beta"] = mult.beta;
        out["mat_classes"] = mult.mat_classes.size();
        if (oracle) {
            out["oracle"] =
                equilin::equivariant_basis(equilin::ActionSpec::weight_space(arch.dims)).dim;
            out["match"] = out["closed_form"] == out["oracle"];
        }
    } else if (kind == "wreath") {
        equilin::ActionSpec base = [&]() {
            if (base_kind == "deepsets" || base_kind == "vector")
                return equilin::ActionSpec::vector_perm(n);
            if (base_kind == "graph") return equilin::ActionSpec::matrix_conj(n);
            if (base_kind == "dws")
                return equilin::ActionSpec::weight_space(parse_dims(dims_csv));
            throw equilin::InvalidInputError("count: unknown --base " + base_kind);
        }();
        long siamese = equilin::siamese_count(base);
        long s = equilin::fixed_basis(base).size();
        out["siamese"] = siamese;
        out["non_siamese"] = equilin::nonsiamese_count(s, 2);
        out["total"] = siamese + s * s;
        if (oracle) {
            out["oracle"] =
                equilin::equivariant_basis(equilin::ActionSpec::wreath_tuple(base, k)).dim;
            out["match"] = out["total"] == out["oracle"];
        }
    } else {
        throw equilin::InvalidInputError("count: unknown --kind " + kind);
    }
    emit(out);
    return 0;
}

int run_verify(const std::string& spec_path, const std::string& layer_path, int trials,
               double tol, uint64_t seed) {
    equilin::ActionSpec spec = equilin::spec_from_json(read_json_file(spec_path));
    json lj = read_json_file(layer_path);
    std::string kind = lj.at("kind").get<std::string>();

    std::function<equilin::Vec(const equilin::Vec&)> layer;
    if (kind == "deepsets") {
        double a = lj.at("a").get<double>(), b = lj.at("b").get<double>();
        layer = [a, b](const equilin::Vec& x) { return equilin::deepsets_layer(a, b, x); };
    } else if (kind == "ign" || kind == "dws") {
        equilin::SchurCoefficients coeffs = equilin::coeffs_from_json(lj.at("coeffs"));
        layer = [spec, coeffs](const equilin::Vec& x) {
            return equilin::apply_layer(spec, coeffs, x);
        };
    } else if (kind == "wreath") {
        if (spec.kind != equilin::ActionSpec::Kind::WreathTuple)
            throw equilin::InvalidInputError("verify: wreath layer needs a wreath_tuple spec");
        equilin::FixedBasis basis = equilin::fixed_basis(*spec.base);
        equilin::WreathCoefficients wc;
        wc.a = equilin::mat_from_json(lj.at("a"));
        if (lj.contains("siamese")) wc.siamese = equilin::coeffs_from_json(lj.at("siamese"));
        int k = spec.k;
        int dim = spec.base->ambient_dim();
        layer = [wc, basis, k, dim](const equilin::Vec& x) {
            return equilin::flatten_tuple(
                equilin::wreath_layer(wc, basis, equilin::unflatten_tuple(k, dim, x)));
        };
    } else if (kind == "matrix") {
        equilin::Mat m = equilin::mat_from_json(lj.at("data"));
        equilin::Vec offset;
        if (lj.contains("offset")) offset = lj.at("offset").get<equilin::Vec>();
        layer = [m, offset](const equilin::Vec& x) {
            equilin::Vec y = equilin::mat_vec(m, x);
            if (!offset.empty()) y = equilin::vec_add(y, offset);
            return y;
        };
    } else {
        throw equilin::InvalidInputError("verify: unknown layer kind " + kind);
    }

    equilin::EquivarianceReport report =
        equilin::check_equivariance(layer, spec, trials, tol, seed);
    emit(equilin::report_to_json(report));
    return report.pass ? 0 : 1;
}

int run_report() {
    std::vector<equilin::CriterionResult> results = equilin::run_acceptance();
    bool all = true;
    json arr = json::array();
    for (const equilin::CriterionResult& r : results) {
        all = all && r.pass;
        json rec;
        rec["id"] = r.id;
        rec["name"] = r.name;
        rec["pass"] = r.pass;
        rec["details"] = r.details;
        arr.push_back(std::move(rec));
    }
    json out;
    out["criteria"] = std::move(arr);
    out["all_pass"] = all;
    emit(out);
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"equivariant linear layers for permutation groups"};
    app.require_subcommand(1);

    std::string kind, in_path, spec_path, layer_path, emit_path, base_kind = "deepsets";
    std::string dims_csv;
    int n = 0, k = 2, trials = 200;
    double tol = 1e-9;
    uint64_t seed = equilin::kDefaultSeed;
    bool oracle = false, invariant = false;

    CLI::App* dec = app.add_subcommand("decompose", "split an element into components");
    dec->add_option("--kind", kind, "vector | graph | dws")->required();
    dec->add_option("--in", in_path, "input JSON file (default stdin)");
    dec->add_option("--n", n, "expected size (informational)");

    CLI::App* bd = app.add_subcommand("basis-dim", "oracle commutant dimension");
    bd->add_option("--spec", spec_path, "action spec JSON file")->required();
    bd->add_option("--emit-basis", emit_path, "write the basis matrices to a file");
    bd->add_flag("--invariant", invariant, "maps to the trivial scalar action");

    CLI::App* cnt = app.add_subcommand("count", "closed-form layer counts");
    cnt->add_option("--kind", kind, "ign | dws | wreath")->required();
    cnt->add_option("--n", n, "matrix/vector size");
    cnt->add_option("--dims", dims_csv, "comma-separated layer widths");
    cnt->add_option("--base", base_kind, "wreath base: deepsets | graph | dws");
    cnt->add_option("--k", k, "tuple length");
    cnt->add_flag("--oracle", oracle, "cross-check against the oracle");

    CLI::App* ver = app.add_subcommand("verify", "randomized equivariance check");
    ver->add_option("--spec", spec_path, "action spec JSON file")->required();
    ver->add_option("--layer", layer_path, "layer JSON file")->required();
    ver->add_option("--trials", trials, "number of randomized trials");
    ver->add_option("--tol", tol, "relative tolerance");
    ver->add_option("--seed", seed, "rng seed");

    CLI::App* rep = app.add_subcommand("report", "run the full verification suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (dec->parsed()) return run_decompose(kind, in_path);
        if (bd->parsed()) return run_basis_dim(spec_path, emit_path, invariant);
        if (cnt->parsed()) return run_count(kind, n, dims_csv, base_kind, k, oracle);
        if (ver->parsed()) return run_verify(spec_path, layer_path, trials, tol, seed);
        if (rep->parsed()) return run_report();
    } catch (const equilin::Error& e) {
        return fail(e.what(), 2);
    } catch (const json::exception& e) {
        return fail(std::string("json: ") + e.what(), 2);
    } catch (const std::exception& e) {
        return fail(e.what(), 2);
    }
    return 2;
}
