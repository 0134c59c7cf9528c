#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "weylstat/cartan.hpp"
#include "weylstat/rational.hpp"

namespace weylstat {

/// A weight in fundamental-weight coordinates. Everything this layer touches
/// (simple roots, rho, highest weights, orbit elements) is integral in this
/// basis, so exact integer coordinates are used throughout; rational-valued
/// geometry lives in the alcove module, which has its own point type.
using Weight = std::vector<std::int64_t>;

std::string weight_str(const Weight& w);
Weight parse_weight(std::string_view s);            // "1,0,2", any length
Weight parse_weight(std::string_view s, int rank);  // same, length must equal rank

struct PositiveRoot {
    Weight fund;                              // fundamental coordinates
    std::vector<std::int64_t> simple_coords;  // alpha = sum m_i alpha_i
    std::vector<std::int64_t> coroot_coords;  // coroot in the simple-coroot basis
    std::int64_t height = 0;                  // sum of simple_coords
    Rational norm2;                           // <alpha, alpha>, long roots = 2
    bool long_root = false;
};

/// Immutable finite root system. Built once per Cartan type; all queries are
/// const and safe to share across threads. The bilinear form is normalized so
/// the long roots have squared norm 2. For H3/H4/I2(m) only the numerology
/// block (degrees, exponents, Coxeter number, gamma, |W|) is available and
/// the root-data accessors throw UnsupportedType.
class RootSystem {
  public:
    static RootSystem build(const CartanType& type);
    static RootSystem build(std::string_view type_string);

    const CartanType& type() const { return type_; }
    int rank() const { return n_; }
    bool has_roots() const { return type_.crystallographic(); }

    // ---- numerology (all families) ----
    std::int64_t coxeter_number() const { return h_; }
    const std::vector<std::int64_t>& degrees() const { return degrees_; }
    const std::vector<std::int64_t>& exponents() const { return exponents_; }
    std::int64_t gamma() const { return gamma_; }
    const Integer& weyl_order() const { return weyl_order_; }
    /// Suter's identities: sum e_i^2 == n(h^2 + gamma - h)/6 and
    /// sum e_i^3 == n h (gamma - h)/4, evaluated exactly.
    std::pair<bool, bool> suter_checks() const;

    // ---- root data (crystallographic families only) ----
    const std::vector<std::vector<std::int64_t>>& cartan_matrix() const;
    const std::vector<PositiveRoot>& positive_roots() const;
    const std::vector<std::vector<Rational>>& gram() const;
    const Weight& rho() const;
    const PositiveRoot& highest_root() const;
    const PositiveRoot& highest_short_root() const;
    std::int64_t dual_coxeter() const;  // g

    Rational inner(const Weight& x, const Weight& y) const;
    bool is_dominant(const Weight& w) const;
    /// s_i(w), 0-based node index.
    Weight reflect(Weight w, int i) const;
    /// The unique dominant element of the orbit of w.
    Weight dominant_representative(Weight w) const;
    /// Full Weyl orbit, sorted lexicographically (deterministic).
    std::vector<Weight> weyl_orbit(const Weight& w) const;
    /// |orbit(w)| = |W| / |W_J|, J = {i : w_i = 0}; requires w dominant.
    Integer orbit_size(const Weight& dominant_weight) const;
    /// <mu, coroot of positive_roots()[k]>, an integer.
    std::int64_t coroot_pairing(std::size_t k, const Weight& mu) const;
    /// Coordinates of an element of the root lattice in the simple-root
    /// basis; nullopt when w is not in the root lattice.
    std::optional<std::vector<std::int64_t>> root_coordinates(const Weight& w) const;

  private:
    RootSystem() = default;
    void require_roots() const;
    void check_rank(const Weight& w) const;

    CartanType type_;
    int n_ = 0;
    std::int64_t h_ = 0;
    std::int64_t gamma_ = 0;
    std::int64_t dual_coxeter_ = 0;
    std::vector<std::int64_t> degrees_, exponents_;
    Integer weyl_order_;

    std::vector<std::vector<std::int64_t>> cartan_;
    std::vector<PositiveRoot> roots_;
    std::vector<std::vector<Rational>> gram_;
    std::vector<std::vector<Rational>> cartan_inv_;
    Weight rho_;
    std::size_t highest_idx_ = 0, highest_short_idx_ = 0;
    std::vector<Integer> parabolic_order_;  // indexed by node bitmask
};

}  // namespace weylstat
