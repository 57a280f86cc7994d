#include "qgr/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qgr {

std::vector<int> IndexSet::second() const {
    std::vector<int> out;
    std::size_t p = 0;
    for (int i = 1; i <= n; ++i) {
        if (p < first.size() && first[p] == i)
            ++p;
        else
            out.push_back(i);
    }
    return out;
}

bool IndexSet::contains(int i) const {
    return std::binary_search(first.begin(), first.end(), i);
}

std::string IndexSet::label() const {
    std::ostringstream out;
    out << "{";
    for (std::size_t i = 0; i < first.size(); ++i) out << (i ? "," : "") << first[i];
    out << "}";
    return out.str();
}

Perm Perm::inverse() const {
    Perm r;
    r.values.resize(values.size());
    for (int i = 1; i <= n(); ++i) r.values[(*this)(i) - 1] = i;
    return r;
}

Perm Perm::compose(const Perm& o) const {
    if (n() != o.n()) throw std::invalid_argument("Perm::compose: size mismatch");
    Perm r;
    r.values.resize(values.size());
    for (int i = 1; i <= n(); ++i) r.values[i - 1] = (*this)(o(i));
    return r;
}

Perm Perm::identity(int n) {
    Perm p;
    p.values.resize(n);
    std::iota(p.values.begin(), p.values.end(), 1);
    return p;
}

Perm Perm::longest(int n) {
    Perm p;
    p.values.resize(n);
    for (int i = 1; i <= n; ++i) p.values[i - 1] = n + 1 - i;
    return p;
}

std::vector<int> Perm::reduced_word() const {
    // bubble sort; each adjacent swap records one letter, total = inversions
    std::vector<int> w = values, word;
    bool more = true;
    while (more) {
        more = false;
        for (std::size_t a = 0; a + 1 < w.size(); ++a) {
            if (w[a] > w[a + 1]) {
                std::swap(w[a], w[a + 1]);
                word.push_back(static_cast<int>(a) + 1);
                more = true;
            }
        }
    }
    // word applied right-to-left rebuilds the permutation from the identity
    std::reverse(word.begin(), word.end());
    return word;
}

bool Perm::is_grassmannian(int k) const {
    for (int i = 1; i < k; ++i)
        if ((*this)(i) > (*this)(i + 1)) return false;
    for (int i = k + 1; i < n(); ++i)
        if ((*this)(i) > (*this)(i + 1)) return false;
    return true;
}

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    for (std::size_t i = 0; i + 1 < parts.size(); ++i)
        if (parts[i] < parts[i + 1]) throw std::invalid_argument("Partition: not decreasing");
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    for (int v : parts)
        if (v < 0) throw std::invalid_argument("Partition: negative part");
}

int Partition::size() const {
    int s = 0;
    for (int v : parts) s += v;
    return s;
}

int Partition::part(int i) const { return i < length() ? parts[i] : 0; }

bool Partition::fits(int k, int m) const { return length() <= k && part(0) <= m; }

Partition Partition::complement(int k, int m) const {
    if (!fits(k, m)) throw std::invalid_argument("complement: partition outside box");
    std::vector<int> out(k);
    for (int j = 0; j < k; ++j) out[j] = m - part(k - 1 - j);
    return Partition(out);
}

Partition Partition::conjugate() const {
    if (parts.empty()) return Partition{};
    std::vector<int> out(parts[0], 0);
    for (int p : parts)
        for (int j = 0; j < p; ++j) ++out[j];
    return Partition(out);
}

std::string Partition::label() const {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < parts.size(); ++i) out << (i ? "," : "") << parts[i];
    out << ")";
    return out.str();
}

long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

std::vector<IndexSet> enumerate_index_sets(int k, int n) {
    if (k < 0 || n < 0 || k > n || n > 12) throw std::invalid_argument("enumerate_index_sets: bad range");
    std::vector<IndexSet> out;
    std::vector<int> cur(k);
    std::iota(cur.begin(), cur.end(), 1);
    if (k == 0) {
        out.push_back(IndexSet{k, n, {}});
        return out;
    }
    while (true) {
        out.push_back(IndexSet{k, n, cur});
        int i = k - 1;
        while (i >= 0 && cur[i] == n - k + i + 1) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

int index_position(const IndexSet& I) {
    auto all = enumerate_index_sets(I.k, I.n);
    for (std::size_t p = 0; p < all.size(); ++p)
        if (all[p].first == I.first) return static_cast<int>(p);
    throw std::invalid_argument("index_position: not found");
}

Perm sigma_of(const IndexSet& I) {
    Perm p;
    p.values = I.first;
    auto rest = I.second();
    p.values.insert(p.values.end(), rest.begin(), rest.end());
    return p;
}

IndexSet index_of_sigma(const Perm& sigma, int k) {
    std::vector<int> first(sigma.values.begin(), sigma.values.begin() + k);
    std::sort(first.begin(), first.end());
    return IndexSet{k, sigma.n(), first};
}

Partition partition_of_sigma(const Perm& sigma, int k) {
    std::vector<int> lam(k);
    for (int j = 1; j <= k; ++j) lam[j - 1] = sigma(k - j + 1) - k + j - 1;
    return Partition(lam);
}

Perm sigma_of_partition(const Partition& lam, int k, int n) {
    if (!lam.fits(k, n - k)) throw std::invalid_argument("sigma_of_partition: shape mismatch");
    Perm p;
    p.values.resize(n);
    for (int j = 1; j <= k; ++j) p.values[j - 1] = lam.part(k - j) + j;
    Partition conj = lam.conjugate();
    for (int j = 1; j <= n - k; ++j) p.values[k + j - 1] = -conj.part(j - 1) + j + k;
    return p;
}

Partition partition_of_index(const IndexSet& I) {
    return partition_of_sigma(sigma_of(I), I.k);
}

IndexSet index_of_partition(const Partition& lam, int k, int n) {
    return index_of_sigma(sigma_of_partition(lam, k, n), k);
}

Perm sigma_of_partition_lattice(const Partition& lam, int k, int n) {
    if (!lam.fits(k, n - k)) throw std::invalid_argument("lattice rule: shape mismatch");
    // walk the boundary of lambda inside the k x (n-k) box from the SW corner
    // to the NE corner; the positions of the vertical steps give sigma(1..k)
    std::vector<int> vertical;
    int step = 0;
    for (int row = k; row >= 1; --row) {
        int below = (row == k) ? 0 : lam.part(row);  // part of the row beneath
        for (int h = 0; h < lam.part(row - 1) - below; ++h) ++step;
        ++step;
        vertical.push_back(step);
    }
    // remaining horizontal steps complete the walk; they do not enter the tuple
    Perm p;
    p.values = vertical;
    std::sort(p.values.begin(), p.values.end());
    std::vector<int> rest;
    for (int i = 1; i <= n; ++i)
        if (!std::binary_search(p.values.begin(), p.values.end(), i)) rest.push_back(i);
    p.values.insert(p.values.end(), rest.begin(), rest.end());
    return p;
}

IndexSet apply_perm(const Perm& sigma, const IndexSet& I) {
    std::vector<int> first;
    for (int i : I.first) first.push_back(sigma(i));
    std::sort(first.begin(), first.end());
    return IndexSet{I.k, I.n, first};
}

std::vector<int> tuple_images(const Perm& sigma) { return sigma.values; }

}  // namespace qgr
