#ifndef ISOL_ROOTS_HPP
#define ISOL_ROOTS_HPP

#include <memory>
#include <utility>
#include <vector>

#include "isol/enclosure.hpp"
#include "isol/polynomial.hpp"

namespace isol {

// One certified root: the disk (center, radius) contains exactly one root of
// the target polynomial. radius 0 means the root is the exact dyadic center.
struct CertifiedRoot {
    DyadicComplex center;
    Dyadic radius;
    bool is_real = false;
    bool exact = false;
};

enum class GraphKind { RealChain, NearestNeighbor, ConjugatePairs };

// Certified enclosures for all d roots of a square-free integer polynomial.
// Real roots come first, sorted ascending; complex roots follow in conjugate
// pairs with mirrored enclosures. Enclosing regions are pairwise disjoint.
//
// The set refines its enclosures on demand (precision doubling); refinement
// is cached behind a mutex, so queries are logically pure and safe to run
// concurrently.
class RootSet {
public:
    // Encloses all roots with radius <= eps, escalating precision until
    // certification succeeds. Throws DomainError for non-square-free input
    // and ResourceError if certification fails at maximal precision.
    static RootSet approximate_roots(const IntPolynomial& p, const Dyadic& eps);

    const IntPolynomial& polynomial() const;
    size_t size() const;
    size_t real_count() const;

    CertifiedRoot root(size_t i) const;
    // Rectangle certified to contain root i alone.
    ComplexEnclosure box(size_t i) const;
    // Conjugate partner index; -1 for real roots.
    int partner(size_t i) const;

    // Shrink root i's enclosure until its radius is at most eps.
    void refine(size_t i, const Dyadic& eps) const;
    void refine_all(const Dyadic& eps) const;

    // Enclosure of the distance from root i to the nearest distinct root.
    RealEnclosure separation(size_t i, unsigned prec = RealEnclosure::kDefaultPrec) const;

    // Exact dyadic range of |w - x|^2 over w in root i's enclosure.
    RealEnclosure dist2_to_point(size_t i, const DyadicComplex& x) const;
    // Exact dyadic range of |w - z|^2 over w in the enclosure, z in X.
    RealEnclosure dist2_to_box(size_t i, const ComplexEnclosure& X) const;

    // Sign of Re(root_i) - g: -1 / +1 when strictly off the vertical line
    // x = g, 0 when the root lies exactly on it (decided algebraically).
    int side_of_vertical(size_t i, const Dyadic& g) const;
    // Same for Im(root_i) - g.
    int side_of_horizontal(size_t i, const Dyadic& g) const;

private:
    struct Impl;
    std::shared_ptr<Impl> impl_;
};

// Distances from x to the nearest and second-nearest root (real roots only
// when restrict_real). Throws DomainError with fewer than two eligible roots.
std::pair<RealEnclosure, RealEnclosure> dist_and_dist2(
    const RootSet& rs, const DyadicComplex& x, bool restrict_real,
    unsigned prec = RealEnclosure::kDefaultPrec);

// Index of the root nearest to x; ties break to the lowest index (conjugate
// and mirror-symmetric ties are detected exactly).
size_t cell_index(const RootSet& rs, const DyadicComplex& x);
// Nearest root in the combined universe of roots of p followed by roots of
// p' (indices 0..d-1 then d..2d-2).
size_t cell_index_combined(const RootSet& rs_p, const RootSet& rs_dp, const DyadicComplex& x);

// real_chain: consecutive real roots; nearest_neighbor: each root to one
// nearest distinct root (directed); conjugate_pairs: one edge per pair.
std::vector<std::pair<size_t, size_t>> build_graph(const RootSet& rs, GraphKind kind);

}  // namespace isol

#endif
