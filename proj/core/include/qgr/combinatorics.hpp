#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qgr {

/// Double partition I = (I_1, I_2) of {1..n} with |I_1| = k; I_2 implicit.
struct IndexSet {
    int k = 0, n = 0;
    std::vector<int> first;  // sorted, 1-based, size k

    std::vector<int> second() const;  // complement, sorted
    bool contains(int i) const;
    bool operator==(const IndexSet& o) const {
        return k == o.k && n == o.n && first == o.first;
    }
    bool operator<(const IndexSet& o) const { return first < o.first; }
    std::string label() const;
};

/// Permutation of {1..n}, 1-based images.
struct Perm {
    std::vector<int> values;

    int n() const { return static_cast<int>(values.size()); }
    int operator()(int i) const { return values.at(i - 1); }
    Perm inverse() const;
    Perm compose(const Perm& o) const;  // (this ∘ o)(i) = this(o(i))
    static Perm identity(int n);
    static Perm longest(int n);  // i -> n + 1 - i
    bool operator==(const Perm& o) const { return values == o.values; }
    /// Reduced word in adjacent transpositions s_a (1-based positions).
    std::vector<int> reduced_word() const;
    bool is_grassmannian(int k) const;
};

/// Weakly decreasing nonnegative parts; trailing zeros are not stored.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p);
    int size() const;                       // |lambda|
    int length() const { return static_cast<int>(parts.size()); }
    int part(int i) const;                  // 0-based, 0 beyond length
    bool fits(int k, int m) const;          // inside k x m box
    Partition complement(int k, int m) const;  // lambda^vee in k x m
    Partition conjugate() const;
    bool operator==(const Partition& o) const { return parts == o.parts; }
    bool operator<(const Partition& o) const { return parts < o.parts; }
    std::string label() const;
};

long binomial(int n, int k);

/// All C(n,k) index sets in lexicographic order of I_1 (the canonical basis
/// order of every matrix in this project).
std::vector<IndexSet> enumerate_index_sets(int k, int n);

/// Position of I in enumerate_index_sets(I.k, I.n).
int index_position(const IndexSet& I);

/// Conversions between the three labelings.
Perm sigma_of(const IndexSet& I);           // unique Grassmannian perm with sigma(I_min) = I
IndexSet index_of_sigma(const Perm& sigma, int k);
Partition partition_of_sigma(const Perm& sigma, int k);
Perm sigma_of_partition(const Partition& lam, int k, int n);
Partition partition_of_index(const IndexSet& I);
IndexSet index_of_partition(const Partition& lam, int k, int n);

/// Lattice-path construction of sigma^lambda (walk SW corner to NE corner);
/// independent route used as an oracle against sigma_of_partition.
Perm sigma_of_partition_lattice(const Partition& lam, int k, int n);

/// sigma(I) = (sigma(I_1), sigma(I_2)) for an arbitrary permutation.
IndexSet apply_perm(const Perm& sigma, const IndexSet& I);

/// Substitution z -> z_sigma as variable images: slot i holds z_{sigma(i)},
/// so variable z_i maps to position sigma^{-1}(i)... returned as the list
/// images[i-1] = sigma(i) for direct use with LaurentPoly::permute_vars on
/// (z_1..z_n): the polynomial f(z_1,...,z_n) becomes f(z_{sigma(1)},...).
std::vector<int> tuple_images(const Perm& sigma);

}  // namespace qgr
