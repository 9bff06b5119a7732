#include "equilin/groups.hpp"

#include <algorithm>
#include <numeric>

namespace equilin {

Permutation::Permutation(std::vector<int> imgs) : images(std::move(imgs)) {
    std::vector<char> seen(images.size(), 0);
    for (int v : images) {
        if (v < 0 || v >= size() || seen[v])
            throw InvalidInputError("Permutation: image array is not a bijection");
        seen[v] = 1;
    }
}

bool Permutation::is_identity() const {
    for (int i = 0; i < size(); ++i)
        if (images[i] != i) return false;
    return true;
}

Permutation Permutation::inverse() const {
    Permutation q;
    q.images.resize(images.size());
    for (int i = 0; i < size(); ++i) q.images[images[i]] = i;
    return q;
}

Permutation Permutation::identity(int n) {
    Permutation p;
    p.images.resize(n);
    std::iota(p.images.begin(), p.images.end(), 0);
    return p;
}

Permutation Permutation::transposition(int n, int i, int j) {
    Permutation p = identity(n);
    std::swap(p.images[i], p.images[j]);
    return p;
}

Permutation Permutation::forward_cycle(int n) {
    Permutation p;
    p.images.resize(n);
    for (int i = 0; i < n; ++i) p.images[i] = (i + 1) % n;
    return p;
}

Permutation compose(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw DimensionError("compose: permutation sizes differ");
    Permutation c;
    c.images.resize(a.size());
    for (int i = 0; i < a.size(); ++i) c.images[i] = a(b(i));
    return c;
}

Vec act_vector(const Permutation& p, const Vec& x) {
    if (static_cast<int>(x.size()) != p.size())
        throw DimensionError("act_vector: vector length does not match permutation size");
    Vec y(x.size());
    for (int i = 0; i < p.size(); ++i) y[p(i)] = x[i];
    return y;
}

Mat act_matrix(const Permutation& p, const Mat& a) {
    if (a.rows != a.cols) throw DimensionError("act_matrix: matrix is not square");
    if (a.rows != p.size()) throw DimensionError("act_matrix: size does not match permutation");
    Mat b(a.rows, a.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) b(p(i), p(j)) = a(i, j);
    return b;
}

Mat perm_matrix(const Permutation& p) {
    Mat m(p.size(), p.size());
    for (int j = 0; j < p.size(); ++j) m(p(j), j) = 1.0;
    return m;
}

bool MultiPermutation::is_identity() const {
    return std::all_of(parts.begin(), parts.end(),
                       [](const Permutation& p) { return p.is_identity(); });
}

MultiPermutation MultiPermutation::inverse() const {
    MultiPermutation g;
    g.parts.reserve(parts.size());
    for (const Permutation& p : parts) g.parts.push_back(p.inverse());
    return g;
}

MultiPermutation MultiPermutation::identity(const std::vector<int>& hidden_dims) {
    MultiPermutation g;
    g.parts.reserve(hidden_dims.size());
    for (int d : hidden_dims) g.parts.push_back(Permutation::identity(d));
    return g;
}

MultiPermutation compose(const MultiPermutation& a, const MultiPermutation& b) {
    if (a.parts.size() != b.parts.size())
        throw DimensionError("compose: multi-permutation factor counts differ");
    MultiPermutation c;
    c.parts.reserve(a.parts.size());
    for (size_t m = 0; m < a.parts.size(); ++m) c.parts.push_back(compose(a.parts[m], b.parts[m]));
    return c;
}

ArchSpec::ArchSpec(std::vector<int> d) : dims(std::move(d)) {
    if (depth() < 2) throw InvalidInputError("ArchSpec: need at least two layers (M >= 2)");
    for (int v : dims)
        if (v < 2) throw InvalidInputError("ArchSpec: all layer widths must be >= 2");
}

std::vector<int> ArchSpec::hidden_dims() const {
    return std::vector<int>(dims.begin() + 1, dims.end() - 1);
}

int ArchSpec::flat_dim() const {
    int total = 0;
    for (int m = 1; m <= depth(); ++m) total += dims[m] * dims[m - 1] + dims[m];
    return total;
}

WeightSpacePoint WeightSpacePoint::zeros(const ArchSpec& arch) {
    WeightSpacePoint v;
    v.arch = arch;
    for (int m = 1; m <= arch.depth(); ++m) {
        v.weights.emplace_back(arch.dims[m], arch.dims[m - 1]);
        v.biases.emplace_back(arch.dims[m], 0.0);
    }
    return v;
}

void WeightSpacePoint::validate() const {
    int M = arch.depth();
    if (static_cast<int>(weights.size()) != M || static_cast<int>(biases.size()) != M)
        throw DimensionError("WeightSpacePoint: wrong number of weight/bias blocks");
    for (int m = 1; m <= M; ++m) {
        const Mat& w = weights[m - 1];
        if (w.rows != arch.dims[m] || w.cols != arch.dims[m - 1])
            throw DimensionError("WeightSpacePoint: weight shape mismatch");
        if (static_cast<int>(biases[m - 1].size()) != arch.dims[m])
            throw DimensionError("WeightSpacePoint: bias length mismatch");
    }
}

Vec WeightSpacePoint::flatten() const {
    Vec flat;
    flat.reserve(arch.flat_dim());
    for (size_t m = 0; m < weights.size(); ++m) {
        flat.insert(flat.end(), weights[m].data.begin(), weights[m].data.end());
        flat.insert(flat.end(), biases[m].begin(), biases[m].end());
    }
    return flat;
}

WeightSpacePoint WeightSpacePoint::unflatten(const ArchSpec& arch, const Vec& flat) {
    if (static_cast<int>(flat.size()) != arch.flat_dim())
        throw DimensionError("unflatten: flat vector length mismatch");
    WeightSpacePoint v = zeros(arch);
    size_t off = 0;
    for (int m = 1; m <= arch.depth(); ++m) {
        Mat& w = v.weights[m - 1];
        std::copy(flat.begin() + off, flat.begin() + off + w.data.size(), w.data.begin());
        off += w.data.size();
        Vec& b = v.biases[m - 1];
        std::copy(flat.begin() + off, flat.begin() + off + b.size(), b.begin());
        off += b.size();
    }
    return v;
}

WeightSpacePoint act_weightspace(const MultiPermutation& g, const WeightSpacePoint& v) {
    v.validate();
    int M = v.arch.depth();
    if (static_cast<int>(g.parts.size()) != M - 1)
        throw DimensionError("act_weightspace: expected one permutation per hidden layer");
    for (int m = 1; m < M; ++m)
        if (g.parts[m - 1].size() != v.arch.dims[m])
            throw DimensionError("act_weightspace: permutation size does not match hidden width");

    // tau_0 and tau_M are identities on the input/output indices.
    auto tau = [&](int m) -> Permutation {
        if (m == 0) return Permutation::identity(v.arch.dims[0]);
        if (m == M) return Permutation::identity(v.arch.dims[M]);
        return g.parts[m - 1];
    };

    WeightSpacePoint out = WeightSpacePoint::zeros(v.arch);
    for (int m = 1; m <= M; ++m) {
        Permutation row = tau(m), col = tau(m - 1);
        const Mat& w = v.weights[m - 1];
        Mat& wo = out.weights[m - 1];
        for (int i = 0; i < w.rows; ++i)
            for (int j = 0; j < w.cols; ++j) wo(row(i), col(j)) = w(i, j);
        const Vec& b = v.biases[m - 1];
        Vec& bo = out.biases[m - 1];
        for (int i = 0; i < static_cast<int>(b.size()); ++i) bo[row(i)] = b[i];
    }
    return out;
}

bool WreathElement::is_identity() const {
    if (!outer.is_identity()) return false;
    for (const BaseElement& e : inner)
        if (!std::visit([](const auto& x) { return x.is_identity(); }, e)) return false;
    return true;
}

WreathElement WreathElement::inverse() const {
    WreathElement w;
    w.outer = outer.inverse();
    w.inner.resize(inner.size());
    for (size_t i = 0; i < inner.size(); ++i) w.inner[i] = base_inverse(inner[outer(static_cast<int>(i))]);
    return w;
}

BaseElement base_inverse(const BaseElement& e) {
    return std::visit([](const auto& x) -> BaseElement { return x.inverse(); }, e);
}

BaseElement base_compose(const BaseElement& a, const BaseElement& b) {
    if (a.index() != b.index()) throw InvalidInputError("base_compose: mixed element kinds");
    if (std::holds_alternative<Permutation>(a))
        return compose(std::get<Permutation>(a), std::get<Permutation>(b));
    return compose(std::get<MultiPermutation>(a), std::get<MultiPermutation>(b));
}

WreathElement compose(const WreathElement& a, const WreathElement& b) {
    if (a.outer.size() != b.outer.size() || a.inner.size() != b.inner.size())
        throw DimensionError("compose: wreath element sizes differ");
    // (a*b) acts as first b then a on tuples; matching slots gives
    // outer = b.outer o a.outer and inner_j = a.inner[b.outer^{-1}(j)] * b.inner[j].
    WreathElement c;
    c.outer = compose(b.outer, a.outer);
    Permutation binv = b.outer.inverse();
    c.inner.resize(a.inner.size());
    for (size_t j = 0; j < c.inner.size(); ++j)
        c.inner[j] = base_compose(a.inner[binv(static_cast<int>(j))], b.inner[j]);
    return c;
}

GroupElement element_inverse(const GroupElement& e) {
    return std::visit([](const auto& x) -> GroupElement { return x.inverse(); }, e);
}

GroupElement element_compose(const GroupElement& a, const GroupElement& b) {
    if (a.index() != b.index()) throw InvalidInputError("element_compose: mixed element kinds");
    if (std::holds_alternative<Permutation>(a))
        return compose(std::get<Permutation>(a), std::get<Permutation>(b));
    if (std::holds_alternative<MultiPermutation>(a))
        return compose(std::get<MultiPermutation>(a), std::get<MultiPermutation>(b));
    return compose(std::get<WreathElement>(a), std::get<WreathElement>(b));
}

ActionSpec ActionSpec::vector_perm(int n) {
    ActionSpec s;
    s.kind = Kind::VectorPerm;
    s.n = n;
    s.validate();
    return s;
}

ActionSpec ActionSpec::matrix_conj(int n) {
    ActionSpec s;
    s.kind = Kind::MatrixConj;
    s.n = n;
    s.validate();
    return s;
}

ActionSpec ActionSpec::weight_space(std::vector<int> dims) {
    ActionSpec s;
    s.kind = Kind::WeightSpace;
    s.arch = ArchSpec(std::move(dims));
    return s;
}

ActionSpec ActionSpec::wreath_tuple(ActionSpec base_spec, int k,
                                    std::vector<Permutation> outer_gens) {
    ActionSpec s;
    s.kind = Kind::WreathTuple;
    s.base = std::make_shared<const ActionSpec>(std::move(base_spec));
    s.k = k;
    s.outer_generators = std::move(outer_gens);
    s.validate();
    return s;
}

int ActionSpec::ambient_dim() const {
    switch (kind) {
        case Kind::VectorPerm: return n;
        case Kind::MatrixConj: return n * n;
        case Kind::WeightSpace: return arch.flat_dim();
        case Kind::WreathTuple: return k * base->ambient_dim();
    }
    throw InvalidInputError("ActionSpec: unknown kind");
}

void ActionSpec::validate() const {
    switch (kind) {
        case Kind::VectorPerm:
            if (n < 2) throw InvalidInputError("VectorPerm: n must be >= 2");
            break;
        case Kind::MatrixConj:
            if (n < 2) throw InvalidInputError("MatrixConj: n must be >= 2");
            break;
        case Kind::WeightSpace:
            ArchSpec(arch.dims);  // re-validate
            break;
        case Kind::WreathTuple:
            if (!base) throw InvalidInputError("WreathTuple: missing base spec");
            if (base->kind == Kind::WreathTuple)
                throw UnsupportedSpecError("WreathTuple: nested tuples are not supported");
            base->validate();
            if (k < 2) throw InvalidInputError("WreathTuple: k must be >= 2");
            for (const Permutation& p : outer_generators)
                if (p.size() != k)
                    throw DimensionError("WreathTuple: outer generator size must equal k");
            break;
    }
}

namespace {

std::vector<Permutation> sym_generators(int n) {
    if (n == 2) return {Permutation::transposition(2, 0, 1)};
    return {Permutation::transposition(n, 0, 1), Permutation::forward_cycle(n)};
}

}  // namespace

BaseElement base_identity(const ActionSpec& base_spec) {
    switch (base_spec.kind) {
        case ActionSpec::Kind::VectorPerm:
        case ActionSpec::Kind::MatrixConj:
            return Permutation::identity(base_spec.n);
        case ActionSpec::Kind::WeightSpace:
            return MultiPermutation::identity(base_spec.arch.hidden_dims());
        default:
            throw UnsupportedSpecError("base_identity: unsupported base kind");
    }
}

std::vector<GroupElement> generators(const ActionSpec& spec) {
    spec.validate();
    std::vector<GroupElement> gens;
    switch (spec.kind) {
        case ActionSpec::Kind::VectorPerm:
        case ActionSpec::Kind::MatrixConj:
            for (Permutation& p : sym_generators(spec.n)) gens.emplace_back(std::move(p));
            break;
        case ActionSpec::Kind::WeightSpace: {
            std::vector<int> hidden = spec.arch.hidden_dims();
            for (size_t m = 0; m < hidden.size(); ++m) {
                for (Permutation& p : sym_generators(hidden[m])) {
                    MultiPermutation g = MultiPermutation::identity(hidden);
                    g.parts[m] = std::move(p);
                    gens.emplace_back(std::move(g));
                }
            }
            break;
        }
        case ActionSpec::Kind::WreathTuple: {
            // Base generators in slot 0; outer generators with trivial inners.
            // Transitivity of the outer group carries the slot-0 copies to
            // every slot, so together these generate the wreath product.
            std::vector<GroupElement> base_gens = generators(*spec.base);
            for (GroupElement& bg : base_gens) {
                WreathElement w;
                w.outer = Permutation::identity(spec.k);
                w.inner.assign(spec.k, base_identity(*spec.base));
                if (auto* p = std::get_if<Permutation>(&bg))
                    w.inner[0] = std::move(*p);
                else if (auto* mp = std::get_if<MultiPermutation>(&bg))
                    w.inner[0] = std::move(*mp);
                else
                    throw UnsupportedSpecError("generators: wreath base must not be a tuple");
                gens.emplace_back(std::move(w));
            }
            std::vector<Permutation> outer = spec.outer_generators.empty()
                                                 ? sym_generators(spec.k)
                                                 : spec.outer_generators;
            for (Permutation& p : outer) {
                WreathElement w;
                w.outer = std::move(p);
                w.inner.assign(spec.k, base_identity(*spec.base));
                gens.emplace_back(std::move(w));
            }
            break;
        }
    }
    return gens;
}

namespace {

Permutation weightspace_ambient_perm(const ArchSpec& arch, const MultiPermutation& g) {
    int M = arch.depth();
    if (static_cast<int>(g.parts.size()) != M - 1)
        throw DimensionError("ambient_perm: multi-permutation does not match architecture");
    auto tau = [&](int m) -> Permutation {
        if (m == 0 || m == M) return Permutation::identity(arch.dims[m]);
        return g.parts[m - 1];
    };
    Permutation pi;
    pi.images.resize(arch.flat_dim());
    int off = 0;
    for (int m = 1; m <= M; ++m) {
        int rows = arch.dims[m], cols = arch.dims[m - 1];
        Permutation row = tau(m), col = tau(m - 1);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                pi.images[off + i * cols + j] = off + row(i) * cols + col(j);
        off += rows * cols;
        for (int i = 0; i < rows; ++i) pi.images[off + i] = off + row(i);
        off += rows;
    }
    return pi;
}

}  // namespace

Permutation ambient_perm(const ActionSpec& spec, const GroupElement& g) {
    switch (spec.kind) {
        case ActionSpec::Kind::VectorPerm: {
            const auto& p = std::get<Permutation>(g);
            if (p.size() != spec.n) throw DimensionError("ambient_perm: permutation size mismatch");
            return p;
        }
        case ActionSpec::Kind::MatrixConj: {
            const auto& p = std::get<Permutation>(g);
            if (p.size() != spec.n) throw DimensionError("ambient_perm: permutation size mismatch");
            Permutation pi;
            pi.images.resize(spec.n * spec.n);
            for (int i = 0; i < spec.n; ++i)
                for (int j = 0; j < spec.n; ++j)
                    pi.images[i * spec.n + j] = p(i) * spec.n + p(j);
            return pi;
        }
        case ActionSpec::Kind::WeightSpace:
            return weightspace_ambient_perm(spec.arch, std::get<MultiPermutation>(g));
        case ActionSpec::Kind::WreathTuple: {
            const auto& w = std::get<WreathElement>(g);
            if (w.outer.size() != spec.k || static_cast<int>(w.inner.size()) != spec.k)
                throw DimensionError("ambient_perm: wreath element does not match k");
            int db = spec.base->ambient_dim();
            Permutation outer_inv = w.outer.inverse();
            Permutation pi;
            pi.images.resize(spec.k * db);
            for (int s = 0; s < spec.k; ++s) {
                Permutation inner = std::visit(
                    [&](const auto& x) { return ambient_perm(*spec.base, GroupElement(x)); },
                    w.inner[s]);
                int dest = outer_inv(s);
                for (int q = 0; q < db; ++q) pi.images[s * db + q] = dest * db + inner(q);
            }
            return pi;
        }
    }
    throw InvalidInputError("ambient_perm: unknown spec kind");
}

Vec act_ambient(const ActionSpec& spec, const GroupElement& g, const Vec& flat) {
    return act_vector(ambient_perm(spec, g), flat);
}

std::vector<Vec> act_tuple(const WreathElement& w, const ActionSpec& base_spec,
                           const std::vector<Vec>& t) {
    if (static_cast<int>(t.size()) != w.outer.size() || t.size() != w.inner.size())
        throw DimensionError("act_tuple: tuple length does not match wreath element");
    int db = base_spec.ambient_dim();
    std::vector<Vec> out(t.size());
    for (int i = 0; i < static_cast<int>(t.size()); ++i) {
        int src = w.outer(i);
        if (static_cast<int>(t[src].size()) != db)
            throw DimensionError("act_tuple: tuple entry has wrong base dimension");
        out[i] = std::visit(
            [&](const auto& x) { return act_ambient(base_spec, GroupElement(x), t[src]); },
            w.inner[src]);
    }
    return out;
}

Vec flatten_tuple(const std::vector<Vec>& t) {
    Vec flat;
    for (const Vec& v : t) flat.insert(flat.end(), v.begin(), v.end());
    return flat;
}

std::vector<Vec> unflatten_tuple(int k, int base_dim, const Vec& flat) {
    if (static_cast<int>(flat.size()) != k * base_dim)
        throw DimensionError("unflatten_tuple: length mismatch");
    std::vector<Vec> t(k);
    for (int s = 0; s < k; ++s)
        t[s] = Vec(flat.begin() + static_cast<size_t>(s) * base_dim,
                   flat.begin() + static_cast<size_t>(s + 1) * base_dim);
    return t;
}

}  // namespace equilin
