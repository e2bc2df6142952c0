#pragma once

#include "zpstab/polygon.hpp"
#include "zpstab/stabbing.hpp"

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace CaDiCaL {
class Solver;
}

namespace zpstab::detail {

/// Boolean model of everything a ZP table and the vertex flags say about the
/// orientation of vertex triples. A triple variable is true when the triple
/// turns left. Every clause holds for any simple polygon in general position
/// with that table, so a class the model refutes is impossible for the
/// polygon. Rank-3 chirotope axioms (three-term Grassmann-Pluecker) are
/// added lazily, only where a candidate model breaks them.
class OrderTypeModel {
public:
    OrderTypeModel(const ZPTable& zp, const VertexFlags& flags);
    ~OrderTypeModel();
    OrderTypeModel(const OrderTypeModel&) = delete;
    OrderTypeModel& operator=(const OrderTypeModel&) = delete;

    /// Records a known class of visible pair xy.
    void fix(std::size_t x, std::size_t y, bool internal);

    /// For each pair: the only class the model allows (true = Internal),
    /// or nullopt when both are possible. Throws InconsistentInput when
    /// nothing is possible.
    std::vector<std::optional<bool>> decide(std::span<const VertexPair> pairs);

    /// True when the actual orientations of pts satisfy every clause,
    /// exact counts included. Used to test soundness.
    bool admits(std::span<const Point> pts);

private:
    using Lit = int;

    Lit chi(std::size_t a, std::size_t b, std::size_t c) const;
    Lit fresh();
    void clause(std::initializer_list<Lit> lits);
    void clause(const std::vector<Lit>& lits);
    Lit lit_xor(Lit a, Lit b);
    Lit lit_and(std::initializer_list<Lit> lits);
    Lit parity(const std::vector<Lit>& lits);
    /// Lit for "direction y - x enters the interior at x".
    Lit enters(std::size_t x, std::size_t y);
    Lit exits(std::size_t x, std::size_t y);

    void encode_flags();
    void encode_simplicity();
    /// Zero classes and boundary-parity facts of pair xy; cheap, always on.
    void encode_pair(std::size_t x, std::size_t y);
    /// Exact parity and nonzero constraints of pair xy; added on demand.
    void encode_counts(std::size_t x, std::size_t y);

    /// Solves under assumptions, refining with chirotope axioms (and exact
    /// counts once enabled) until the model satisfies them. Returns false
    /// when unsatisfiable.
    bool solve(std::span<const Lit> assumptions);
    void load_model();
    int s(std::size_t a, std::size_t b, std::size_t c) const { return sign_[(a * n_ + b) * n_ + c]; }
    bool add_count_constraints();
    bool add_violated_axioms();
    bool check_axioms(const std::array<std::size_t, 5>& sorted_points);
    bool value(Lit l) const;

    const ZPTable& zp_;
    const VertexFlags& flags_;
    std::size_t n_;
    int vars_ = 0;
    std::unique_ptr<CaDiCaL::Solver> solver_;
    std::vector<Lit> enters_;
    bool exact_counts_ = false;
    std::vector<bool> counts_encoded_;
    std::vector<std::int8_t> sign_;  ///< orientations in the current model
};

}  // namespace zpstab::detail
