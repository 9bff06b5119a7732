#include "equilin/json_io.hpp"

namespace equilin {

json mat_to_json(const Mat& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows; ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols; ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

Mat mat_from_json(const json& j) {
    if (!j.is_array() || j.empty() || !j[0].is_array())
        throw InvalidInputError("matrix JSON must be a non-empty array of rows");
    Mat m(static_cast<int>(j.size()), static_cast<int>(j[0].size()));
    for (int i = 0; i < m.rows; ++i) {
        if (static_cast<int>(j[i].size()) != m.cols)
            throw InvalidInputError("matrix JSON has ragged rows");
        for (int jj = 0; jj < m.cols; ++jj) m(i, jj) = j[i][jj].get<double>();
    }
    return m;
}

json perm_to_json(const Permutation& p) { return json(p.images); }

Permutation perm_from_json(const json& j) {
    if (!j.is_array()) throw InvalidInputError("permutation JSON must be an array of images");
    return Permutation(j.get<std::vector<int>>());
}

json spec_to_json(const ActionSpec& spec) {
    json j;
    switch (spec.kind) {
        case ActionSpec::Kind::VectorPerm:
            j["kind"] = "vector_perm";
            j["n"] = spec.n;
            break;
        case ActionSpec::Kind::MatrixConj:
            j["kind"] = "matrix_conj";
            j["n"] = spec.n;
            break;
        case ActionSpec::Kind::WeightSpace:
            j["kind"] = "weight_space";
            j["dims"] = spec.arch.dims;
            break;
        case ActionSpec::Kind::WreathTuple:
            j["kind"] = "wreath_tuple";
            j["base"] = spec_to_json(*spec.base);
            j["k"] = spec.k;
            if (!spec.outer_generators.empty()) {
                json gens = json::array();
                for (const Permutation& p : spec.outer_generators) gens.push_back(perm_to_json(p));
                j["outer_generators"] = std::move(gens);
            }
            break;
    }
    return j;
}

ActionSpec spec_from_json(const json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "vector_perm") return ActionSpec::vector_perm(j.at("n").get<int>());
    if (kind == "matrix_conj") return ActionSpec::matrix_conj(j.at("n").get<int>());
    if (kind == "weight_space")
        return ActionSpec::weight_space(j.at("dims").get<std::vector<int>>());
    if (kind == "wreath_tuple") {
        std::vector<Permutation> outer;
        if (j.contains("outer_generators"))
            for (const json& g : j.at("outer_generators")) outer.push_back(perm_from_json(g));
        return ActionSpec::wreath_tuple(spec_from_json(j.at("base")), j.at("k").get<int>(),
                                        std::move(outer));
    }
    throw InvalidInputError("unknown action spec kind: " + kind);
}

namespace {

std::string tag_to_string(LabelTag t) {
    switch (t) {
        case LabelTag::Trivial: return "trivial";
        case LabelTag::Vec: return "vec";
        case LabelTag::Mat: return "mat";
        case LabelTag::GraphAntisym: return "graph_antisym";
        case LabelTag::GraphSymZeroDiag: return "graph_sym_zero_diag";
        case LabelTag::TupleTrivialSym: return "tuple_trivial_sym";
        case LabelTag::TupleTrivialZeroSum: return "tuple_trivial_zero_sum";
        case LabelTag::TupleLift: return "tuple_lift";
    }
    throw InvalidInputError("unknown label tag");
}

}  // namespace

json label_to_json(const IsoClassLabel& label) {
    json j;
    j["tag"] = tag_to_string(label.tag);
    switch (label.tag) {
        case LabelTag::Vec:
            j["m"] = label.args[0];
            j["n"] = label.args[1];
            break;
        case LabelTag::Mat:
            j["m"] = label.args[0];
            j["rows"] = label.args[1];
            j["cols"] = label.args[2];
            break;
        case LabelTag::GraphAntisym:
        case LabelTag::GraphSymZeroDiag:
            j["n"] = label.args[0];
            break;
        case LabelTag::TupleLift: {
            IsoClassLabel inner;
            inner.tag = label.inner_tag;
            inner.args = label.inner_args;
            j["inner"] = label_to_json(inner);
            break;
        }
        default: break;
    }
    return j;
}

IsoClassLabel label_from_json(const json& j) {
    std::string tag = j.at("tag").get<std::string>();
    if (tag == "trivial") return trivial_label();
    if (tag == "vec") return vec_label(j.at("m").get<int>(), j.at("n").get<int>());
    if (tag == "mat")
        return mat_label(j.at("m").get<int>(), j.at("rows").get<int>(), j.at("cols").get<int>());
    if (tag == "graph_antisym") return graph_antisym_label(j.at("n").get<int>());
    if (tag == "graph_sym_zero_diag") return graph_sym_zero_diag_label(j.at("n").get<int>());
    if (tag == "tuple_trivial_sym") return tuple_trivial_sym_label();
    if (tag == "tuple_trivial_zero_sum") return tuple_trivial_zero_sum_label();
    if (tag == "tuple_lift") return tuple_lift_label(label_from_json(j.at("inner")));
    throw InvalidInputError("unknown label tag: " + tag);
}

json coeffs_to_json(const SchurCoefficients& coeffs) {
    json arr = json::array();
    for (const auto& [key, value] : coeffs.entries) {
        json rec;
        rec["label"] = label_to_json(key.label);
        rec["from"] = key.from;
        rec["to"] = key.to;
        rec["value"] = value;
        arr.push_back(std::move(rec));
    }
    return arr;
}

SchurCoefficients coeffs_from_json(const json& j) {
    if (!j.is_array()) throw InvalidInputError("coefficients JSON must be an array of records");
    SchurCoefficients c;
    for (const json& rec : j)
        c.set(label_from_json(rec.at("label")), rec.at("from").get<int>(),
              rec.at("to").get<int>(), rec.at("value").get<double>());
    return c;
}

json weightspace_to_json(const WeightSpacePoint& v) {
    json j;
    j["dims"] = v.arch.dims;
    json ws = json::array();
    for (const Mat& w : v.weights) ws.push_back(mat_to_json(w));
    j["weights"] = std::move(ws);
    json bs = json::array();
    for (const Vec& b : v.biases) bs.push_back(json(b));
    j["biases"] = std::move(bs);
    return j;
}

WeightSpacePoint weightspace_from_json(const json& j) {
    ArchSpec arch(j.at("dims").get<std::vector<int>>());
    WeightSpacePoint v = WeightSpacePoint::zeros(arch);
    const json& ws = j.at("weights");
    const json& bs = j.at("biases");
    if (static_cast<int>(ws.size()) != arch.depth() || static_cast<int>(bs.size()) != arch.depth())
        throw DimensionError("weight space JSON: wrong number of blocks");
    for (int m = 0; m < arch.depth(); ++m) {
        v.weights[m] = mat_from_json(ws[m]);
        v.biases[m] = bs[m].get<Vec>();
    }
    v.validate();
    return v;
}

json report_to_json(const EquivarianceReport& r) {
    json j;
    j["trials"] = r.trials;
    j["max_relative_violation"] = r.max_relative_violation;
    j["seed"] = r.seed;
    j["tol"] = r.tol;
    j["pass"] = r.pass;
    return j;
}

}  // namespace equilin
