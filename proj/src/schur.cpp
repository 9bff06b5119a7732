#include "equilin/schur.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace equilin {

namespace {

std::string tag_name(LabelTag t) {
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
    return "?";
}

}  // namespace

std::string IsoClassLabel::to_string() const {
    std::ostringstream os;
    os << tag_name(tag);
    switch (tag) {
        case LabelTag::Vec: os << "(" << args[0] << "," << args[1] << ")"; break;
        case LabelTag::Mat: os << "(" << args[0] << "," << args[1] << "x" << args[2] << ")"; break;
        case LabelTag::GraphAntisym:
        case LabelTag::GraphSymZeroDiag: os << "(" << args[0] << ")"; break;
        case LabelTag::TupleLift: {
            IsoClassLabel in;
            in.tag = inner_tag;
            in.args = inner_args;
            os << "(" << in.to_string() << ")";
            break;
        }
        default: break;
    }
    return os.str();
}

IsoClassLabel trivial_label() { return IsoClassLabel{}; }

IsoClassLabel vec_label(int m, int n) {
    IsoClassLabel l;
    l.tag = LabelTag::Vec;
    l.args = {m, n, 0};
    return l;
}

IsoClassLabel mat_label(int m, int rows, int cols) {
    IsoClassLabel l;
    l.tag = LabelTag::Mat;
    l.args = {m, rows, cols};
    return l;
}

IsoClassLabel graph_antisym_label(int n) {
    IsoClassLabel l;
    l.tag = LabelTag::GraphAntisym;
    l.args = {n, 0, 0};
    return l;
}

IsoClassLabel graph_sym_zero_diag_label(int n) {
    IsoClassLabel l;
    l.tag = LabelTag::GraphSymZeroDiag;
    l.args = {n, 0, 0};
    return l;
}

IsoClassLabel tuple_trivial_sym_label() {
    IsoClassLabel l;
    l.tag = LabelTag::TupleTrivialSym;
    return l;
}

IsoClassLabel tuple_trivial_zero_sum_label() {
    IsoClassLabel l;
    l.tag = LabelTag::TupleTrivialZeroSum;
    return l;
}

IsoClassLabel tuple_lift_label(const IsoClassLabel& inner) {
    if (inner.tag == LabelTag::TupleLift || inner.tag == LabelTag::TupleTrivialSym ||
        inner.tag == LabelTag::TupleTrivialZeroSum)
        throw InvalidInputError("tuple_lift_label: inner class must be a base-space class");
    IsoClassLabel l;
    l.tag = LabelTag::TupleLift;
    l.has_inner = true;
    l.inner_tag = inner.tag;
    l.inner_args = inner.args;
    return l;
}

Vec Decomposition::sum() const {
    Vec total(ambient.ambient_dim(), 0.0);
    for (const IrrepComponent& c : components) {
        if (c.data.size() != total.size())
            throw DimensionError("Decomposition::sum: component has wrong ambient dimension");
        vec_axpy(1.0, c.data, total);
    }
    return total;
}

const IrrepComponent* Decomposition::find(const IsoClassLabel& label, int slot) const {
    for (const IrrepComponent& c : components)
        if (c.label == label && c.slot == slot) return &c;
    return nullptr;
}

void SchurCoefficients::set(const IsoClassLabel& label, int from, int to, double value) {
    entries[SchurKey{label, from, to}] = value;
}

double SchurCoefficients::get(const IsoClassLabel& label, int from, int to) const {
    auto it = entries.find(SchurKey{label, from, to});
    return it == entries.end() ? 0.0 : it->second;
}

const SlotMap* IsoMapTable::find(const IsoClassLabel& label, int slot) const {
    for (const SlotMap& s : slots)
        if (s.label == label && s.slot == slot) return &s;
    return nullptr;
}

int IsoMapTable::multiplicity(const IsoClassLabel& label) const {
    int count = 0;
    for (const SlotMap& s : slots)
        if (s.label == label) ++count;
    return count;
}

std::map<IsoClassLabel, int> IsoMapTable::multiplicities() const {
    std::map<IsoClassLabel, int> m;
    for (const SlotMap& s : slots) ++m[s.label];
    return m;
}

SchurCoefficients IsoMapTable::identity_coefficients() const {
    SchurCoefficients c;
    for (const SlotMap& s : slots) c.set(s.label, s.slot, s.slot, 1.0);
    return c;
}

std::vector<SchurCoefficients> IsoMapTable::unit_coefficient_basis() const {
    std::vector<SchurCoefficients> basis;
    for (const auto& [label, mult] : multiplicities())
        for (int i = 0; i < mult; ++i)
            for (int j = 0; j < mult; ++j) {
                SchurCoefficients c;
                c.set(label, i, j, 1.0);
                basis.push_back(std::move(c));
            }
    return basis;
}

Vec assemble_layer(const SchurCoefficients& coeffs, const Decomposition& decomp,
                   const IsoMapTable& iso_maps) {
    int dim = iso_maps.ambient_dim;
    if (decomp.ambient.ambient_dim() != dim)
        throw DimensionError("assemble_layer: decomposition/table ambient dimension mismatch");

    Vec out(dim, 0.0);
    for (const auto& [key, lambda] : coeffs.entries) {
        const SlotMap* from = iso_maps.find(key.label, key.from);
        const SlotMap* to = iso_maps.find(key.label, key.to);
        if (!from || !to)
            throw LayoutError("assemble_layer: coefficient references nonexistent slot " +
                              key.label.to_string() + "[" + std::to_string(key.from) + "->" +
                              std::to_string(key.to) + "]");
        if (lambda == 0.0) continue;
        const IrrepComponent* comp = decomp.find(key.label, key.from);
        if (!comp) continue;  // component not present: contributes zero
        Vec canonical = from->extract(comp->data);
        Vec placed = to->embed(canonical);
        if (static_cast<int>(placed.size()) != dim)
            throw DimensionError("assemble_layer: embed produced wrong ambient dimension");
        vec_axpy(lambda, placed, out);
    }
    return out;
}

long param_count(const std::vector<int>& multiplicities) {
    if (multiplicities.empty()) throw InvalidInputError("param_count: empty multiplicity list");
    long total = 0;
    for (int a : multiplicities) {
        if (a < 1) throw InvalidInputError("param_count: multiplicities must be >= 1");
        total += static_cast<long>(a) * a;
    }
    return total;
}

double decomposition_constraint_residual(const Decomposition& decomp,
                                         const IsoMapTable& iso_maps) {
    double worst = 0.0;
    auto bump = [&](double v) { worst = std::max(worst, std::fabs(v)); };

    for (const IrrepComponent& comp : decomp.components) {
        const SlotMap* slot = iso_maps.find(comp.label, comp.slot);
        if (!slot)
            throw LayoutError("constraint_residual: component has no slot " +
                              comp.label.to_string());
        Vec canonical = slot->extract(comp.data);
        bump(max_abs(vec_sub(slot->embed(canonical), comp.data)));

        switch (comp.label.tag) {
            case LabelTag::Vec:
                bump(vec_sum(canonical));
                break;
            case LabelTag::Mat: {
                int rows = comp.label.args[1], cols = comp.label.args[2];
                for (int i = 0; i < rows; ++i) {
                    double s = 0.0;
                    for (int j = 0; j < cols; ++j) s += canonical[i * cols + j];
                    bump(s);
                }
                for (int j = 0; j < cols; ++j) {
                    double s = 0.0;
                    for (int i = 0; i < rows; ++i) s += canonical[i * cols + j];
                    bump(s);
                }
                break;
            }
            case LabelTag::GraphAntisym: {
                int n = comp.label.args[0];
                for (int i = 0; i < n; ++i) {
                    double s = 0.0;
                    for (int j = 0; j < n; ++j) {
                        bump(canonical[i * n + j] + canonical[j * n + i]);
                        s += canonical[i * n + j];
                    }
                    bump(s);
                }
                break;
            }
            case LabelTag::GraphSymZeroDiag: {
                int n = comp.label.args[0];
                for (int i = 0; i < n; ++i) {
                    double s = 0.0;
                    bump(canonical[i * n + i]);
                    for (int j = 0; j < n; ++j) {
                        bump(canonical[i * n + j] - canonical[j * n + i]);
                        s += canonical[i * n + j];
                    }
                    bump(s);
                }
                break;
            }
            default:
                break;  // trivial classes are covered by the round trip
        }
    }
    return worst;
}

SchurCoefficients random_coefficients(const IsoMapTable& table, Rng& rng) {
    SchurCoefficients c;
    for (const auto& [label, mult] : table.multiplicities())
        for (int i = 0; i < mult; ++i)
            for (int j = 0; j < mult; ++j) c.set(label, i, j, rng.normal());
    return c;
}

}  // namespace equilin
