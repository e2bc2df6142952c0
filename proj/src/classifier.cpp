#include "zpstab/classifier.hpp"

#include "ordertype.hpp"

#include <algorithm>
#include <memory>

namespace zpstab {

const char* to_string(EdgeClass c) {
    switch (c) {
        case EdgeClass::Internal: return "Internal";
        case EdgeClass::External: return "External";
        case EdgeClass::Boundary: return "Boundary";
        case EdgeClass::Ambiguous: return "Ambiguous";
    }
    return "?";
}

const char* to_string(Provenance p) {
    switch (p) {
        case Provenance::Lemma2Convex: return "Lemma2-convex";
        case Provenance::Lemma2Reflex: return "Lemma2-reflex";
        case Provenance::Lemma3NoOddWitness: return "Lemma3-noOddWitness";
        case Provenance::Lemma3NoEvenWitness: return "Lemma3-noEvenWitness";
        case Provenance::Lemma4Propagation: return "Lemma4-propagation";
        case Provenance::HullPocketLid: return "HullPocketLid";
        case Provenance::PolygonEdge: return "PolygonEdge";
        case Provenance::OrderTypeRefutation: return "OrderType-refutation";
        case Provenance::Unresolved: return "Unresolved";
    }
    return "?";
}

namespace {


template <class Pred>
bool head_property(const ZPTable& zp, std::size_t x, std::size_t y, std::size_t z, Pred pred) {
    const std::size_t n = zp.size();
    for (std::size_t w = x;; w = (w + 1) % n) {
        if (w != z && !pred(zp.at(w, z).head)) return false;
        if (w == y) break;
    }
    return true;
}

}  // namespace

bool even_property(const ZPTable& zp, std::size_t x, std::size_t y, std::size_t z) {
    return head_property(zp, x, y, z, [](ZP c) { return is_even(c); });
}

bool odd_property(const ZPTable& zp, std::size_t x, std::size_t y, std::size_t z) {
    return head_property(zp, x, y, z, [](ZP c) { return c == ZP::Odd; });
}

namespace {

enum class State : std::uint8_t { Unknown, Internal, External, Boundary, Invisible };

/// Per-z prefix counts of chain vertices w that violate Even(., ., z) or
/// Odd(., ., z), so a witness test over a cyclic chain is O(1).
class WitnessIndex {
public:
    explicit WitnessIndex(const ZPTable& zp) : n_(zp.size()) {
        not_even_.assign(n_ * (n_ + 1), 0);
        not_odd_.assign(n_ * (n_ + 1), 0);
        for (std::size_t z = 0; z < n_; ++z)
            for (std::size_t w = 0; w < n_; ++w) {
                const bool bad_even = w != z && !is_even(zp.at(w, z).head);
                const bool bad_odd = w != z && zp.at(w, z).head != ZP::Odd;
                not_even_[z * (n_ + 1) + w + 1] = not_even_[z * (n_ + 1) + w] + bad_even;
                not_odd_[z * (n_ + 1) + w + 1] = not_odd_[z * (n_ + 1) + w] + bad_odd;
            }
    }

    bool even(std::size_t x, std::size_t y, std::size_t z) const {
        return count(not_even_, x, y, z) == 0;
    }
    bool odd(std::size_t x, std::size_t y, std::size_t z) const {
        return count(not_odd_, x, y, z) == 0;
    }

private:
    std::uint32_t count(const std::vector<std::uint32_t>& pre, std::size_t x, std::size_t y,
                        std::size_t z) const {
        const std::uint32_t* p = pre.data() + z * (n_ + 1);
        if (x <= y) return p[y + 1] - p[x];
        return (p[n_] - p[x]) + p[y + 1];
    }

    std::size_t n_;
    std::vector<std::uint32_t> not_even_;
    std::vector<std::uint32_t> not_odd_;
};

class Classifier {
public:
    Classifier(const ZPTable& zp, const VertexFlags& flags, std::span<const VertexPair> poly_edges,
               std::span<const VertexPair> hull)
        : zp_(zp), flags_(flags), n_(zp.size()), witness_(zp), state_(n_ * n_, State::Invisible),
          prov_(n_ * n_, Provenance::Unresolved), is_hull_(n_ * n_, false) {
        if (flags.convex.size() != n_ || flags.on_hull.size() != n_)
            throw Error(ErrorCode::InconsistentInput, "vertex flag count differs from table size");
        for (std::size_t x = 0; x < n_; ++x)
            for (std::size_t y = 0; y < n_; ++y)
                if (x != y && zp.at(x, y).body == ZP::Zero) state_[x * n_ + y] = State::Unknown;
        for (const auto& [a, b] : poly_edges) {
            if (a >= n_ || b >= n_ || !((a + 1) % n_ == b || (b + 1) % n_ == a))
                throw Error(ErrorCode::InconsistentInput, "pair (" + std::to_string(a) + ", " +
                                                              std::to_string(b) +
                                                              ") is not a boundary edge");
            require_visible(a, b, "polygon edge");
        }
        if (poly_edges.size() != n_)
            throw Error(ErrorCode::InconsistentInput, "expected " + std::to_string(n_) +
                                                          " polygon edges");
        poly_edges_.assign(poly_edges.begin(), poly_edges.end());
        for (const auto& [a, b] : hull) {
            if (a >= n_ || b >= n_ || a == b)
                throw Error(ErrorCode::InconsistentInput, "hull edge out of range");
            if (!flags.on_hull[a] || !flags.on_hull[b])
                throw Error(ErrorCode::InconsistentInput, "hull edge endpoint not flagged on_hull");
            require_visible(a, b, "hull edge");
            is_hull_[a * n_ + b] = is_hull_[b * n_ + a] = true;
            hull_.emplace_back(a, b);
            if ((a + 1) % n_ != b && (b + 1) % n_ != a) require_pocket(a, b);
        }
        for (std::size_t v = 0; v < n_; ++v)
            if (flags.on_hull[v] && !flags.convex[v])
                throw Error(ErrorCode::InconsistentInput,
                            "vertex " + std::to_string(v) + " is on the hull but reflex");
    }

    std::vector<EdgeClassification> run(const ClassifierOptions& options) {
        // Every rule is monotone in what is already known, so iterating the
        // stages to a joint fixed point makes the final classes independent
        // of stage order; only provenance labels depend on it.
        bool changed = true;
        while (changed) {
            changed = false;
            for (RuleStage s : options.order) changed |= run_stage(s);
        }
        verify_triangles();

        std::vector<EdgeClassification> out;
        for (std::size_t x = 0; x < n_; ++x)
            for (std::size_t y = x + 1; y < n_; ++y) {
                const State s = at(x, y);
                if (s == State::Invisible) continue;
                EdgeClassification c{{x, y}, EdgeClass::Ambiguous, prov_[x * n_ + y]};
                if (s == State::Internal) c.cls = EdgeClass::Internal;
                if (s == State::External) c.cls = EdgeClass::External;
                if (s == State::Boundary) c.cls = EdgeClass::Boundary;
                out.push_back(c);
            }
        return out;
    }

private:
    State at(std::size_t x, std::size_t y) const { return state_[x * n_ + y]; }

    // The pocket under a lid is the side with no hull vertex. It closes into
    // a simple polygon with the lid, so one of its inner vertices is reflex.
    void require_pocket(std::size_t a, std::size_t b) const {
        for (auto [from, to] : {std::pair{a, b}, std::pair{b, a}}) {
            bool hull_inside = false, reflex = false;
            for (std::size_t v = (from + 1) % n_; v != to; v = (v + 1) % n_) {
                hull_inside |= flags_.on_hull[v];
                reflex |= !flags_.convex[v];
            }
            if (hull_inside) continue;
            if (!reflex)
                throw Error(ErrorCode::InconsistentInput, "pocket under lid (" + std::to_string(a) +
                                                              ", " + std::to_string(b) +
                                                              ") has no reflex vertex");
            return;
        }
        throw Error(ErrorCode::InconsistentInput, "hull edge (" + std::to_string(a) + ", " +
                                                      std::to_string(b) +
                                                      ") has hull vertices on both sides");
    }

    void require_visible(std::size_t a, std::size_t b, const char* what) const {
        if (at(a, b) == State::Invisible)
            throw Error(ErrorCode::InconsistentInput, std::string(what) + " (" + std::to_string(a) +
                                                          ", " + std::to_string(b) +
                                                          ") has nonzero Body class");
    }

    bool assign(std::size_t x, std::size_t y, State s, Provenance p) {
        State& cur = state_[x * n_ + y];
        if (cur == s) return false;
        if (cur != State::Unknown)
            throw Error(ErrorCode::InconsistentInput,
                        "pair (" + std::to_string(x) + ", " + std::to_string(y) +
                            ") forced both Internal and External by " + to_string(p));
        cur = s;
        state_[y * n_ + x] = s;
        prov_[x * n_ + y] = prov_[y * n_ + x] = p;
        return true;
    }

    /// Polygon edges and hull edges are labeled from the inputs alone; the
    /// inference stages leave them to PolygonEdges and HullLids whatever the
    /// stage order.
    bool structural(std::size_t x, std::size_t y) const {
        return (x + 1) % n_ == y || (y + 1) % n_ == x || is_hull_[x * n_ + y];
    }

    bool open(std::size_t x, std::size_t y) const { return at(x, y) == State::Unknown && !structural(x, y); }

    template <class F>
    bool for_each_unknown(F f) {
        bool changed = false;
        for (std::size_t x = 0; x < n_; ++x)
            for (std::size_t y = x + 1; y < n_; ++y)
                if (open(x, y)) changed |= f(x, y);
        return changed;
    }

    bool run_stage(RuleStage s) {
        switch (s) {
            case RuleStage::PolygonEdges: {
                bool changed = false;
                for (const auto& [a, b] : poly_edges_)
                    if (at(a, b) == State::Unknown)
                        changed |= assign(a, b, State::Boundary, Provenance::PolygonEdge);
                return changed;
            }
            case RuleStage::HullLids: {
                bool changed = false;
                for (const auto& [a, b] : hull_)
                    if (at(a, b) == State::Unknown && (a + 1) % n_ != b && (b + 1) % n_ != a)
                        changed |= assign(a, b, State::External, Provenance::HullPocketLid);
                return changed;
            }
            case RuleStage::Lemma2:
                return for_each_unknown([&](std::size_t x, std::size_t y) { return lemma2(x, y); });
            case RuleStage::Lemma3:
                return for_each_unknown([&](std::size_t x, std::size_t y) { return lemma3(x, y); });
            case RuleStage::Lemma4:
                return lemma4_fixpoint() | lemma4_probe();
            case RuleStage::OrderType:
                return order_type();
        }
        return false;
    }

    bool interior_all(std::size_t x, std::size_t y, bool convex) const {
        for (std::size_t v = (x + 1) % n_; v != y; v = (v + 1) % n_)
            if (flags_.convex[v] != convex) return false;
        return true;
    }

    /// A convex interior vertex z of chain [x, y] with Even over the chain.
    bool has_even_witness(std::size_t x, std::size_t y) const {
        for (std::size_t z = (x + 1) % n_; z != y; z = (z + 1) % n_)
            if (flags_.convex[z] && witness_.even(x, y, z)) return true;
        return false;
    }

    /// A reflex interior vertex z of chain [x, y] with Odd over the chain.
    bool has_odd_witness(std::size_t x, std::size_t y) const {
        for (std::size_t z = (x + 1) % n_; z != y; z = (z + 1) % n_)
            if (!flags_.convex[z] && witness_.odd(x, y, z)) return true;
        return false;
    }

    bool hull_vertex_inside(std::size_t x, std::size_t y) const {
        for (std::size_t v = (x + 1) % n_; v != y; v = (v + 1) % n_)
            if (flags_.on_hull[v]) return true;
        return false;
    }

    /// Whether chain [x, y] can be the pocket side of an E-edge xy. The
    /// pocket's extreme vertex away from xy is a reflex Odd witness, and the
    /// whole chain lies inside the region bounded by the other chain and xy,
    /// so no hull vertex of P can sit strictly inside it.
    bool can_bound_pocket(std::size_t x, std::size_t y) const {
        return !hull_vertex_inside(x, y) && has_odd_witness(x, y);
    }

    /// Head(y, x) is odd iff the direction x - y enters P at x. At a convex
    /// vertex that rules out the segment starting inside; at a reflex vertex
    /// an even value rules out it starting outside.
    bool endpoint_forbids(std::size_t x, std::size_t y, State s) const {
        const bool odd = zp_.at(y, x).head == ZP::Odd;
        if (s == State::Internal) return flags_.convex[x] && odd;
        return !flags_.convex[x] && !odd;
    }

    bool lemma2(std::size_t x, std::size_t y) {
        // A chain whose interior vertices are all reflex sees across itself
        // only through the exterior.
        if (interior_all(x, y, false) || interior_all(y, x, false))
            return assign(x, y, State::External, Provenance::Lemma2Reflex);
        // An all-convex chain cannot bound a pocket, so an E-edge would need
        // the opposite chain to.
        if (flags_.convex[x] && flags_.convex[y] &&
            ((interior_all(x, y, true) && !can_bound_pocket(y, x)) ||
             (interior_all(y, x, true) && !can_bound_pocket(x, y))))
            return assign(x, y, State::Internal, Provenance::Lemma2Convex);
        return false;
    }

    bool lemma3(std::size_t x, std::size_t y) {
        const bool can_be_external = (can_bound_pocket(x, y) || can_bound_pocket(y, x)) &&
                                     !endpoint_forbids(x, y, State::External) &&
                                     !endpoint_forbids(y, x, State::External);
        const bool can_be_internal = has_even_witness(x, y) && has_even_witness(y, x) &&
                                     !endpoint_forbids(x, y, State::Internal) &&
                                     !endpoint_forbids(y, x, State::Internal);
        if (!can_be_external && !can_be_internal)
            throw Error(ErrorCode::InconsistentInput,
                        "pair (" + std::to_string(x) + ", " + std::to_string(y) +
                            ") admits neither an Odd nor an Even witness");
        if (!can_be_external) return assign(x, y, State::Internal, Provenance::Lemma3NoOddWitness);
        if (!can_be_internal)
            return assign(x, y, State::External, Provenance::Lemma3NoEvenWitness);
        return false;
    }

    bool usable(std::size_t a, std::size_t b, State want) const {
        const State s = at(a, b);
        return s == want || s == State::Boundary || s == State::Unknown;
    }

    /// Some apex z strictly inside chain [x, y] whose sides xz, zy may be `want`.
    bool has_apex(std::size_t x, std::size_t y, State want) const {
        for (std::size_t z = (x + 1) % n_; z != y; z = (z + 1) % n_)
            if (usable(x, z, want) && usable(z, y, want)) return true;
        return false;
    }

    bool can_be(std::size_t x, std::size_t y, State want) const {
        return has_apex(x, y, want) && has_apex(y, x, want);
    }

    bool lemma4_fixpoint() {
        bool any = false;
        bool changed = true;
        while (changed) {
            changed = false;
            changed |= for_each_unknown([&](std::size_t x, std::size_t y) {
                if (is_hull_[x * n_ + y]) return false;
                const bool ci = can_be(x, y, State::Internal);
                const bool ce = can_be(x, y, State::External);
                if (!ci && !ce)
                    throw Error(ErrorCode::InconsistentInput,
                                "pair (" + std::to_string(x) + ", " + std::to_string(y) +
                                    ") admits neither an I- nor an E-triangle pair");
                if (!ci) return assign(x, y, State::External, Provenance::Lemma4Propagation);
                if (!ce) return assign(x, y, State::Internal, Provenance::Lemma4Propagation);
                return false;
            });
            any |= changed;
        }
        return any;
    }

    /// Failed-literal probing: a class whose assumption drives the triangle
    /// propagation into a contradiction is impossible.
    bool lemma4_probe() {
        bool any = false;
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t x = 0; x < n_; ++x)
                for (std::size_t y = x + 1; y < n_; ++y) {
                    if (!open(x, y)) continue;
                    const bool i_ok = survives(x, y, State::Internal);
                    const bool e_ok = survives(x, y, State::External);
                    if (!i_ok && !e_ok)
                        throw Error(ErrorCode::InconsistentInput,
                                    "pair (" + std::to_string(x) + ", " + std::to_string(y) +
                                        ") contradicts both classes under propagation");
                    if (!i_ok || !e_ok) {
                        assign(x, y, i_ok ? State::Internal : State::External,
                               Provenance::Lemma4Propagation);
                        lemma4_fixpoint();
                        changed = any = true;
                    }
                }
        }
        return any;
    }

    bool survives(std::size_t x, std::size_t y, State s) {
        const auto saved_state = state_;
        const auto saved_prov = prov_;
        bool ok = true;
        try {
            assign(x, y, s, Provenance::Lemma4Propagation);
            lemma4_fixpoint();
            verify_triangles();
        } catch (const Error&) {
            ok = false;
        }
        state_ = saved_state;
        prov_ = saved_prov;
        return ok;
    }

    bool order_type() {
        std::vector<VertexPair> pending;
        for (std::size_t x = 0; x < n_; ++x)
            for (std::size_t y = x + 1; y < n_; ++y)
                if (open(x, y)) pending.emplace_back(x, y);
        if (pending.empty()) return false;
        if (!order_type_) {
            order_type_ = std::make_unique<detail::OrderTypeModel>(zp_, flags_);
            fed_.assign(n_ * n_, false);
        }
        for (std::size_t x = 0; x < n_; ++x)
            for (std::size_t y = x + 1; y < n_; ++y) {
                const State s = at(x, y);
                if ((s == State::Internal || s == State::External) && !fed_[x * n_ + y]) {
                    order_type_->fix(x, y, s == State::Internal);
                    fed_[x * n_ + y] = true;
                }
            }
        const auto forced = order_type_->decide(pending);
        bool changed = false;
        for (std::size_t i = 0; i < pending.size(); ++i)
            if (forced[i])
                changed |= assign(pending[i].first, pending[i].second,
                                  *forced[i] ? State::Internal : State::External,
                                  Provenance::OrderTypeRefutation);
        return changed;
    }

    void verify_triangles() const {
        for (std::size_t x = 0; x < n_; ++x)
            for (std::size_t y = x + 1; y < n_; ++y) {
                const State s = at(x, y);
                if ((s != State::Internal && s != State::External) || is_hull_[x * n_ + y]) continue;
                if (!can_be(x, y, s))
                    throw Error(ErrorCode::InconsistentInput,
                                "pair (" + std::to_string(x) + ", " + std::to_string(y) +
                                    ") lacks the triangle pair its class requires");
            }
    }

    const ZPTable& zp_;
    const VertexFlags& flags_;
    std::size_t n_;
    WitnessIndex witness_;
    std::vector<State> state_;
    std::vector<Provenance> prov_;
    std::vector<bool> is_hull_;
    std::vector<VertexPair> poly_edges_;
    std::vector<VertexPair> hull_;
    std::unique_ptr<detail::OrderTypeModel> order_type_;
    std::vector<bool> fed_;
};

}  // namespace

std::vector<EdgeClassification> classify_edges(const ZPTable& zp, const VertexFlags& flags,
                                               std::span<const VertexPair> polygon_edges,
                                               std::span<const VertexPair> hull_edges,
                                               const ClassifierOptions& options) {
    Classifier c(zp, flags, polygon_edges, hull_edges);
    return c.run(options);
}

std::vector<AmbiguityWitness> explain_ambiguous(const Polygon& poly, const VisibilityMatrix& vis,
                                                std::span<const VertexPair> ambiguous) {
    std::vector<AmbiguityWitness> out;
    for (const auto& [x, y] : ambiguous) {
        auto a = is_triangular_chain(poly, vis, x, y);
        auto b = is_triangular_chain(poly, vis, y, x);
        if (!a && !b)
            throw Error(ErrorCode::NoWitnessFound,
                        "ambiguous pair (" + std::to_string(x) + ", " + std::to_string(y) +
                            ") is not spanned by a triangular chain");
        if (!a || (b && b->length > a->length)) a = std::move(b);
        out.push_back({{x, y}, std::move(*a)});
    }
    return out;
}

std::vector<AmbiguityWitness> explain_ambiguous(const Polygon& poly,
                                                std::span<const VertexPair> ambiguous) {
    if (ambiguous.empty()) return {};
    return explain_ambiguous(poly, visibility_oracle(poly), ambiguous);
}

}  // namespace zpstab
