#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace qgr {

/// Ordered alphabet of symbols with a per-variable Laurent flag fixed at
/// construction. Polynomials over different tables never mix.
class VarTable {
public:
    VarTable(std::vector<std::string> names, std::vector<bool> laurent)
        : names_(std::move(names)), laurent_(std::move(laurent)) {
        if (names_.size() != laurent_.size())
            throw std::invalid_argument("VarTable: names/flags size mismatch");
    }

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    bool laurent(std::size_t i) const { return laurent_.at(i); }

    int find(const std::string& name) const {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name) return static_cast<int>(i);
        return -1;
    }

    std::size_t index(const std::string& name) const {
        int i = find(name);
        if (i < 0) throw std::invalid_argument("VarTable: unknown variable " + name);
        return static_cast<std::size_t>(i);
    }

    bool operator==(const VarTable& o) const {
        return names_ == o.names_ && laurent_ == o.laurent_;
    }

private:
    std::vector<std::string> names_;
    std::vector<bool> laurent_;
};

using VarTablePtr = std::shared_ptr<const VarTable>;

/// Builder used by the domain-specific factories below.
class VarTableBuilder {
public:
    VarTableBuilder& add(const std::string& name, bool laurent = false) {
        names_.push_back(name);
        flags_.push_back(laurent);
        return *this;
    }
    VarTableBuilder& add_indexed(const std::string& prefix, int count, bool laurent = false) {
        for (int i = 1; i <= count; ++i) add(prefix + std::to_string(i), laurent);
        return *this;
    }
    VarTablePtr build() const { return std::make_shared<VarTable>(names_, flags_); }

private:
    std::vector<std::string> names_;
    std::vector<bool> flags_;
};

/// z1..zn, kp, p1^{±1}, p2^{±1} — the weight-space operator alphabet.
inline VarTablePtr weight_table(int n) {
    return VarTableBuilder{}
        .add_indexed("z", n)
        .add("kp")
        .add("p1", true)
        .add("p2", true)
        .build();
}

/// g1..gk, z1..zn, q — cohomology representatives and quantum matrices.
inline VarTablePtr cohomology_table(int k, int n) {
    return VarTableBuilder{}.add_indexed("g", k).add_indexed("z", n).add("q").build();
}

/// X^{±1}, Z1..Zn^{±1} — K-theory of the projective space.
inline VarTablePtr ktheory_p_table(int n) {
    return VarTableBuilder{}.add("X", true).add_indexed("Z", n, true).build();
}

/// Z1..Zn^{±1} — coefficient ring of equivariant K-theory.
inline VarTablePtr ktheory_z_table(int n) {
    return VarTableBuilder{}.add_indexed("Z", n, true).build();
}

/// g1..gk^{±1}, Z1..Zn^{±1} — K-theory representatives on the Grassmannian.
inline VarTablePtr ktheory_g_table(int k, int n) {
    return VarTableBuilder{}.add_indexed("g", k, true).add_indexed("Z", n, true).build();
}

}  // namespace qgr
