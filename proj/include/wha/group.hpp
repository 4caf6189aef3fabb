#pragma once

// Finite groups given by Cayley table. Element 0 is the identity. Builders
// for cyclic, dihedral and symmetric families plus raw tables; conjugacy
// classes and p-regular classes.

#include <memory>
#include <string>
#include <vector>

#include "wha/gf.hpp"

namespace wha {

struct invalid_table : error {
    explicit invalid_table(const std::string& why) : error("invalid Cayley table: " + why) {}
};

struct ConjugacyClass {
    int representative = 0;
    std::vector<int> members;
    long element_order = 1;
};

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

class FiniteGroup {
public:
    // validates all axioms exhaustively; identity must be index 0
    static GroupPtr from_table(std::vector<std::vector<int>> table, std::string name = "table");
    static GroupPtr cyclic(int r);
    static GroupPtr dihedral(int r);    // order 2r
    static GroupPtr symmetric(int m);   // order m!
    static GroupPtr trivial() { return cyclic(1); }

    int order() const { return order_; }
    int mul(int a, int b) const { return table_[a][b]; }
    int inv(int a) const { return inverse_[a]; }
    long element_order(int a) const { return elt_order_[a]; }
    long exponent() const;
    const std::string& name() const { return name_; }

    const std::vector<ConjugacyClass>& classes() const { return classes_; }
    int class_of(int a) const { return class_of_[a]; }
    std::vector<ConjugacyClass> p_regular_classes(long p) const;
    // indices into classes() of the p-regular ones
    std::vector<int> p_regular_class_indices(long p) const;

    int conjugate(int x, int a) const { return mul(mul(x, a), inv(x)); }

private:
    FiniteGroup() = default;
    void finish();  // inverses, orders, classes
    int order_ = 0;
    std::string name_;
    std::vector<std::vector<int>> table_;
    std::vector<int> inverse_;
    std::vector<long> elt_order_;
    std::vector<ConjugacyClass> classes_;
    std::vector<int> class_of_;
};

}  // namespace wha
