#pragma once

#include "bmw/laurent.hpp"

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace bmw {

using Partition = std::vector<int>;  // no trailing zeros; {} is the empty partition
using Tableau = std::vector<Partition>;  // t_0 = {}, ..., t_n

struct Node {
    int row = 0;  // 1-based
    int col = 0;
    bool operator==(const Node& o) const { return row == o.row && col == o.col; }
};

enum class NodeKind { Addable, Removable };

struct CellLabel {
    int f = 0;
    Partition lambda;
    bool operator==(const CellLabel& o) const { return f == o.f && lambda == o.lambda; }
    bool operator<(const CellLabel& o) const {
        return f != o.f ? f < o.f : lambda < o.lambda;
    }
};

// eigenvalue r^er q^eq of L_k
struct Content {
    int er = 1;
    int eq = 0;
    LaurentPoly mono() const { return LaurentPoly::monomial(1, eq, er); }
    bool operator==(const Content& o) const { return er == o.er && eq == o.eq; }
};

int size(const Partition& p);
std::string partitionStr(const Partition& p);
Partition parsePartition(const std::string& s);  // "2,1", "" is empty; throws on bad input
bool isPartition(const Partition& p);
std::string tableauStr(const Tableau& t);  // "∅|1|2|2,1"
std::string cellStr(const CellLabel& c);   // "f|lambda"

std::vector<Partition> partitionsOf(int n);  // lexicographically decreasing
std::vector<Node> addableNodes(const Partition& p);    // by row
std::vector<Node> removableNodes(const Partition& p);  // by row
Partition addNode(const Partition& p, const Node& x);
Partition removeNode(const Partition& p, const Node& x);
int nodeContent(const Partition& p, const Node& x, NodeKind kind);
bool dominates(const Partition& a, const Partition& b);
Partition conjugate(const Partition& p);
int hookLength(const Partition& p, int i, int j);

std::vector<CellLabel> cellLabels(int n);
mpz_class cellDim(int n, int f, const Partition& lambda);
std::vector<Tableau> enumUpDown(int n, int f, const Partition& lambda);

// the node added or removed between consecutive shapes
struct Step {
    Node node;
    bool add = true;
};
Step stepBetween(const Partition& from, const Partition& to);
Content contentAt(const Tableau& t, int k);  // k = 1..n
std::vector<Content> contents(const Tableau& t);
Tableau tLambda(int n, int f, const Partition& lambda);

// neighbours of a shape in the order used everywhere: removals then additions, by row
std::vector<Partition> neighbours(const Partition& p);

std::vector<Tableau> simClass(const Tableau& t, int k);
std::optional<Tableau> applyS(const Tableau& t, int k);
// a > b as shapes at one position: smaller size is larger, equal size by dominance
bool shapeGreater(const Partition& a, const Partition& b);

std::vector<CellLabel> branchingPredecessors(int n, int f, const Partition& lambda);

mpz_class doubleFactorial(long m);  // m!! for odd m, 1 for m <= 0

}  // namespace bmw
