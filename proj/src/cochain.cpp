#include "p2g/cochain.hpp"

#include <algorithm>
#include <random>

namespace p2g {

namespace {

void check_action_law(const GModule& m) {
    const auto& g = *m.acting;
    const auto& a = *m.coeff;
    if (static_cast<int>(m.action.size()) != g.order())
        throw InvalidInput("module action array size mismatch");
    for (const auto& img : m.action)
        if (static_cast<int>(img.size()) != a.order())
            throw InvalidInput("module action image size mismatch");
    for (Elem x = 0; x < a.order(); ++x)
        if (m.action[g.identity()][x] != x)
            throw InvalidInput("module action of identity is not the identity map");
    auto check_automorphism = [&](Elem h) {
        std::vector<char> seen(a.order(), 0);
        for (Elem x = 0; x < a.order(); ++x) {
            Elem v = m.action[h][x];
            if (v < 0 || v >= a.order() || seen[v])
                throw InvalidInput("module action is not bijective at g=" + std::to_string(h));
            seen[v] = 1;
        }
        for (Elem x = 0; x < a.order(); ++x)
            for (Elem y = 0; y < a.order(); ++y)
                if (m.action[h][a.mul(x, y)] != a.mul(m.action[h][x], m.action[h][y]))
                    throw InvalidInput("module action is not additive at g=" + std::to_string(h));
    };
    // Left-action law: exhaustive for small acting groups; for large ones the
    // law is checked against a generating set, which propagates automorphy
    // from the generators to every element.
    if (g.order() <= FiniteGroup::kLightTestThreshold) {
        for (Elem h = 0; h < g.order(); ++h) check_automorphism(h);
        for (Elem h1 = 0; h1 < g.order(); ++h1)
            for (Elem h2 = 0; h2 < g.order(); ++h2) {
                Elem hh = g.mul(h1, h2);
                for (Elem x = 0; x < a.order(); ++x)
                    if (m.action[hh][x] != m.action[h1][m.action[h2][x]])
                        throw InvalidInput("module left-action law fails");
            }
    } else {
        auto gens = greedy_generators(g);
        for (Elem gen : gens) check_automorphism(gen);
        for (Elem h = 0; h < g.order(); ++h)
            for (Elem gen : gens) {
                Elem hg = g.mul(h, gen);
                for (Elem x = 0; x < a.order(); ++x)
                    if (m.action[hg][x] != m.action[h][m.action[gen][x]])
                        throw InvalidInput("module left-action law fails");
            }
    }
}

}  // namespace

ModulePtr make_module(GroupPtr acting, GroupPtr coeff, std::vector<std::vector<Elem>> action) {
    if (!coeff->is_abelian()) throw InvalidInput("module coefficients must be abelian");
    auto m = std::make_shared<GModule>();
    m->acting = std::move(acting);
    m->coeff = std::move(coeff);
    m->action = std::move(action);
    check_action_law(*m);
    return m;
}

ModulePtr trivial_module(GroupPtr acting, GroupPtr coeff) {
    std::vector<Elem> id(coeff->order());
    for (Elem x = 0; x < coeff->order(); ++x) id[x] = x;
    std::vector<std::vector<Elem>> action(acting->order(), id);
    return make_module(std::move(acting), std::move(coeff), std::move(action));
}

Cochain::Cochain(int degree, ModulePtr module) : degree_(degree), module_(std::move(module)) {
    if (degree < 0) throw InvalidInput("cochain degree must be >= 0");
}

std::int64_t nonidentity_tuple_count(const FiniteGroup& g, int degree) {
    std::int64_t n = 1;
    for (int i = 0; i < degree; ++i) n *= g.order() - 1;
    return n;
}

std::int64_t Cochain::tuple_count() const {
    return nonidentity_tuple_count(*module_->acting, degree_);
}

std::int64_t Cochain::rank_of(std::span<const Elem> args) const {
    const Elem id = module_->acting->identity();
    const int base = module_->acting->order() - 1;
    std::int64_t r = 0;
    for (Elem a : args) {
        Elem nz = a < id ? a : a - 1;
        r = r * base + nz;
    }
    return r;
}

Cochain Cochain::build(int degree, ModulePtr module,
                       const std::function<Elem(std::span<const Elem>)>& fill, const Caps& caps) {
    Cochain c(degree, module);
    const std::int64_t n = c.tuple_count();
    if (n > caps.max_cochain_entries)
        throw CapExceeded("cochain with " + std::to_string(n) + " entries exceeds cap");
    c.values_.assign(static_cast<std::size_t>(n), c.module_->zero());
    const Elem id = module->acting->identity();
    const int m = module->acting->order();
    std::vector<Elem> tuple(degree, id == 0 ? 1 : 0);
    bool any_nonzero = false;
    if (degree == 0) {
        c.values_[0] = fill(tuple);
        any_nonzero = c.values_[0] != c.module_->zero();
    } else if (m > 1) {
        std::int64_t r = 0;
        while (true) {
            c.values_[r] = fill(tuple);
            any_nonzero = any_nonzero || c.values_[r] != c.module_->zero();
            int i = degree - 1;
            for (; i >= 0; --i) {
                ++tuple[i];
                if (tuple[i] == id) ++tuple[i];
                if (tuple[i] < m) break;
                tuple[i] = id == 0 ? 1 : 0;
            }
            if (i < 0) break;
            ++r;
        }
    }
    if (!any_nonzero) c.values_.clear();  // canonical zero representation
    return c;
}

Elem Cochain::value(std::span<const Elem> args) const {
    if (static_cast<int>(args.size()) != degree_)
        throw InvalidInput("cochain evaluated at wrong arity");
    const Elem id = module_->acting->identity();
    for (Elem a : args)
        if (a == id) return module_->zero();
    if (values_.empty()) return module_->zero();
    return values_[rank_of(args)];
}

Elem Cochain::value(std::initializer_list<Elem> args) const {
    return value(std::span<const Elem>(args.begin(), args.size()));
}

bool Cochain::same_shape_as(const Cochain& other) const {
    return degree_ == other.degree_ &&
           module_->acting->order() == other.module_->acting->order() &&
           module_->coeff->order() == other.module_->coeff->order();
}

bool Cochain::operator==(const Cochain& other) const {
    if (!same_shape_as(other)) return false;
    if (values_.empty() && other.values_.empty()) return true;
    const std::int64_t n = tuple_count();
    for (std::int64_t r = 0; r < n; ++r) {
        Elem a = values_.empty() ? module_->zero() : values_[r];
        Elem b = other.values_.empty() ? other.module_->zero() : other.values_[r];
        if (a != b) return false;
    }
    return true;
}

Cochain Cochain::minus(const Cochain& other, const Caps& caps) const {
    if (!same_shape_as(other)) throw InvalidInput("cochain difference shape mismatch");
    return build(degree_, module_, [&](std::span<const Elem> t) {
        return module_->add(value(t), module_->neg(other.value(t)));
    }, caps);
}

void Cochain::for_each_nonidentity_tuple(
    const std::function<bool(std::span<const Elem>, Elem)>& visit) const {
    const Elem id = module_->acting->identity();
    const int m = module_->acting->order();
    if (degree_ == 0) {
        std::vector<Elem> empty;
        visit(std::span<const Elem>(empty.data(), 0), values_.empty() ? module_->zero() : values_[0]);
        return;
    }
    if (m <= 1) return;
    std::vector<Elem> tuple(degree_, id == 0 ? 1 : 0);
    std::int64_t r = 0;
    while (true) {
        Elem v = values_.empty() ? module_->zero() : values_[r];
        if (!visit(std::span<const Elem>(tuple.data(), tuple.size()), v)) return;
        int i = degree_ - 1;
        for (; i >= 0; --i) {
            ++tuple[i];
            if (tuple[i] == id) ++tuple[i];
            if (tuple[i] < m) break;
            tuple[i] = id == 0 ? 1 : 0;
        }
        if (i < 0) break;
        ++r;
    }
}

Elem coboundary_value(const Cochain& c, std::span<const Elem> t) {
    // (dc)(g1..g_{k+1}) = g1 . c(g2..) + sum (-1)^i c(.. g_i g_{i+1} ..) + (-1)^{k+1} c(g1..g_k)
    const auto& mod = *c.module();
    const auto& g = *mod.acting;
    const int k = c.degree();
    if (static_cast<int>(t.size()) != k + 1)
        throw InvalidInput("coboundary_value: wrong arity");
    Elem acc = mod.act(t[0], c.value(t.subspan(1)));
    std::vector<Elem> merged(k);
    for (int i = 1; i <= k; ++i) {
        for (int j = 0; j < k; ++j) {
            if (j < i - 1)
                merged[j] = t[j];
            else if (j == i - 1)
                merged[j] = g.mul(t[i - 1], t[i]);
            else
                merged[j] = t[j + 1];
        }
        Elem term = c.value(std::span<const Elem>(merged.data(), merged.size()));
        acc = (i % 2) ? mod.add(acc, mod.neg(term)) : mod.add(acc, term);
    }
    Elem last = c.value(t.first(k));
    acc = ((k + 1) % 2) ? mod.add(acc, mod.neg(last)) : mod.add(acc, last);
    return acc;
}

Cochain coboundary(const Cochain& c, const Caps& caps) {
    const int k = c.degree();
    if (c.is_zero_stored()) return Cochain(k + 1, c.module());
    return Cochain::build(k + 1, c.module(),
                          [&](std::span<const Elem> t) { return coboundary_value(c, t); }, caps);
}

bool is_cocycle(const Cochain& z, const Caps& caps) {
    if (z.is_zero_stored()) return true;
    Cochain dz = coboundary(z, caps);
    bool zero = true;
    dz.for_each_nonidentity_tuple([&](std::span<const Elem>, Elem v) {
        if (v != dz.module()->zero()) {
            zero = false;
            return false;
        }
        return true;
    });
    return zero;
}

Cochain random_cochain(int degree, const ModulePtr& module, std::uint64_t seed, const Caps& caps) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Elem> dist(0, module->coeff->order() - 1);
    return Cochain::build(degree, module, [&](std::span<const Elem>) { return dist(rng); }, caps);
}

}  // namespace p2g
