#pragma once

#include "bmw/combinatorics.hpp"
#include "bmw/ratfn.hpp"

#include <map>
#include <string>
#include <vector>

namespace bmw {

// square sparse matrix over Q(q,r); rows hold only nonzero entries
class Matrix {
public:
    explicit Matrix(int n = 0) : rows_(n) {}
    static Matrix identity(int n);
    static Matrix scalar(int n, const RationalFn& c);

    int size() const { return (int)rows_.size(); }
    const RationalFn& at(int i, int j) const;
    void set(int i, int j, const RationalFn& v);
    const std::map<int, RationalFn>& row(int i) const { return rows_[i]; }

    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    Matrix scaled(const RationalFn& c) const;
    bool operator==(const Matrix& o) const { return rows_ == o.rows_; }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    bool isDiagonal() const;
    // blockwise Gauss-Jordan; throws std::runtime_error("non-generic block") if singular
    Matrix inverse() const;

private:
    std::vector<std::map<int, RationalFn>> rows_;
};

// exact dense solve; throws std::runtime_error("non-generic block") if singular
std::vector<RationalFn> solveLinear(std::vector<std::vector<RationalFn>> a, std::vector<RationalFn> b);

// Right action: row t of X holds the coefficients of f_t X.
struct RepBlock {
    int n = 0;
    CellLabel cell;
    std::vector<Tableau> basis;
    std::vector<Matrix> T, E;  // index 1..n-1
    std::vector<Matrix> L;     // index 1..n
};

// indices of the ~_i classes, in basis order
std::vector<std::vector<int>> simClasses(const RepBlock& rep, int i);

RepBlock buildRep(int n, int f, const Partition& lambda);

struct RelationResult {
    std::string name;
    bool pass = true;
    std::string detail;  // first failing entry, empty on success
    double seconds = 0;
};

struct CertReport {
    int n = 0;
    CellLabel cell;
    int dim = 0;
    std::vector<RelationResult> relations;
    double buildSeconds = 0;
    bool allPass() const;
    nlohmann::json toJson() const;
};

CertReport certifyRelations(const RepBlock& rep);
// build then certify, with construction timing filled in
CertReport certifyCell(int n, int f, const Partition& lambda);

// L_2...L_n must be scalar; throws std::runtime_error("centrality violated")
RationalFn centralScalar(const RepBlock& rep);

}  // namespace bmw
