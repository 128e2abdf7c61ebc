#pragma once

// The free differential algebra E(H) on a polynomial bialgebra H = k[x_1..x_k]
// (primitive generators), truncated at word weight W, with the coproduct
//   Δ(d^n(x)) = (d⊗I + I⊗d)Δ(d^{n-1}(x)) - [φ, Δ(d^{n-1}(x))]
// for a normalized co-Hochschild 2-cocycle φ of H.
//
// Letters are D^k(x_j) with id k*gens + j and weight k + 1. Elements of E(H)
// and its tensor powers are UTensor values whose words are letter-id lists
// in free-algebra order. E(H) is graded by weight, so the truncated quotient
// is computed piece by piece: the weight-w piece of the ideal is spanned by
// u·r·v with r = d^n(ρ) for the defining relations ρ of H.

#include "twd/ug.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace twd {

inline constexpr int kDefaultWeightCap = 4;

class FreeDiffAlgebra {
public:
    /// base must be abelian (its U is the polynomial ring); φ ∈ H⊗H is given
    /// with commutative monomials over the generators. Throws
    /// PreconditionError for a non-abelian base, for φ that fails cocd or
    /// normd, or for W < 1.
    FreeDiffAlgebra(const LieAlgebra& base, const UTensor& phi, int weight_cap = kDefaultWeightCap);

    int generators() const { return gens_; }
    int weight_cap() const { return W_; }
    const UTensor& phi() const { return phi_; }
    const std::vector<std::string>& generator_names() const { return names_; }

    int letter(int order, int gen) const { return order * gens_ + gen; }
    int letter_order(int id) const { return id / gens_; }
    int letter_gen(int id) const { return id % gens_; }
    int letter_weight(int id) const { return id / gens_ + 1; }
    int word_weight(const Word& w) const;
    std::string letter_name(int id) const;
    /// Names of every letter of weight ≤ slot cap, for format_u.
    std::vector<std::string> letter_names() const;

    /// Free words of weight w (descending lexicographic), and the
    /// normal-form (quotient basis) words. Pieces are built on first use.
    const std::vector<Word>& words(int w) const { return piece(w).words; }
    std::vector<Word> basis(int w) const;
    /// Every normal-form word of weight 1..W.
    std::vector<Word> basis() const;
    Index piece_dim(int w) const;
    Index ideal_dim(int w) const;
    /// Sum of piece dimensions for weights 0..W.
    Index dim() const;

    /// Relations d^n(ρ) of weight w, in the free algebra.
    std::vector<UTensor> relations(int w) const;
    /// Reduced Δ of a letter.
    const UTensor& letter_coproduct(int id) const;

    /// Normal form of an element of the free algebra (any tensor degree),
    /// slot by slot. Throws CapExceeded when a slot outgrows the cap.
    UTensor reduce(const UTensor& t) const;

    /// Largest weight a tensor slot may carry: 1 + (W-1)p², where p bounds
    /// the slot word length of φ (at least 1).
    int slot_cap() const { return slot_cap_; }

private:
    struct Piece {
        std::vector<Word> words;
        std::map<Word, Index> index;
        Subspace<Q> ideal;
        Quotient<Q> quotient;
    };

    const Piece& piece(int w) const;
    const std::vector<std::pair<Word, Q>>& reduce_word(const Word& w) const;

    int gens_;
    int W_;
    int slot_cap_;
    UTensor phi_;
    std::vector<std::string> names_;
    mutable std::map<int, Piece> pieces_;
    mutable std::map<Word, std::vector<std::pair<Word, Q>>> reduced_;
    mutable std::map<int, UTensor> coproducts_;
};

/// Slotwise concatenation product in the free algebra.
UTensor free_mult(const UTensor& u, const UTensor& v);

/// d extended as a derivation (raises one letter's order), in every slot, in
/// the free algebra. Throws CapExceeded when the weight would exceed the slot
/// cap.
UTensor e_derivation(const FreeDiffAlgebra& e, const UTensor& u);

/// Δ of a degree-1 element, computed in the free algebra and reduced.
UTensor e_coproduct(const FreeDiffAlgebra& e, const UTensor& u);
/// Δ applied in one slot, without reduction.
UTensor e_delta_at(const FreeDiffAlgebra& e, const UTensor& t, int slot);

struct FreeDiffReport {
    /// "embedding", "d preserves the ideal", "Δ well-defined", "counit",
    /// "coassociativity", "conjd", "cocd", "normd".
    VerificationReport report;
    /// A basis word u with (d⊗I + I⊗d)Δ(u) ≠ Δ(du): d is then not a bialgebra
    /// derivation.
    std::optional<Word> coderivation_witness;
};
FreeDiffReport verify_twisted_derivation_of_e(const FreeDiffAlgebra& e);

struct SeparationFeasibility {
    bool feasible = false;
    int max_weight = 0;
    /// a with φ - ∂a commuting with Δ of every letter within the cap.
    std::optional<UTensor> a;
};
/// Searches a in E(H)_ε among words of weight ≤ max_weight. A negative answer
/// only concerns the truncation.
SeparationFeasibility separation_feasibility(const FreeDiffAlgebra& e, int max_weight = 2);

} // namespace twd
