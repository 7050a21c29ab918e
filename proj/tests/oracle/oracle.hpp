#pragma once

// Brute-force reference evaluator. Structure constants are plain big rationals at
// fixed parameter values; products are evaluated by direct summation and every
// identity is written out by hand. Nothing here touches the library.

#include <gmpxx.h>

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using Q = mpq_class;
using Vec = std::vector<Q>;
using Prod = std::function<Vec(const Vec&, const Vec&)>;

Vec basis(int n, int i);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Q& s, const Vec& a);

// Square matrix; column j is the image of e_j.
struct Mat {
    int n = 0;
    std::vector<Q> a;

    static Mat identity(int n);
    // images[j] lists (k, c): the image of e_{j+1} has coefficient c on e_k (1-based).
    static Mat from_images(int n, const std::vector<std::vector<std::pair<int, Q>>>& images);
    Vec operator()(const Vec& x) const;
    Mat operator*(const Mat& b) const;
};

// Sparse table entries (i, j, k, c): e_i o e_j has coefficient c on e_k (1-based).
struct Entry {
    int i, j, k;
    Q c;
};
Prod table(int n, const std::vector<Entry>& entries);

struct System {
    int n = 0;
    Mat alpha;
    Mat R;
    std::map<std::string, Prod> p;
};

// Yau twist of one product: alpha o mu, twist alpha.
System twisted(const System& s, const std::string& label, const Mat& alpha);
// x.y = [Rx, y] from the bracket.
System split_bracket(const System& s);
// x>y = x.R(y), x<y = R(x).y from the split product.
System split_dot(const System& s);

using Residual = std::function<Vec(const System&, const std::vector<Vec>&)>;

struct OracleIdentity {
    std::string set;
    std::string id;
    int arity;
    Residual f;
};

// Every identity the oracle knows, keyed by (set, id).
const std::vector<OracleIdentity>& identities();

// Parameter values used by the named systems below.
struct Values4 {
    Q a4, lambda1, b3;
};
struct Values5 {
    Q b, a4, a5, lambda2;
};

System malcev4(const Values4& v);
System corrupted4();
Mat rb4(const Values4& v);
Mat alpha4(const Values4& v);
Mat alpha4_morphic(const Values4& v);
System malcev5();
Mat rb5(const Values5& v);
Mat alpha5(const Values5& v);
Mat alpha5_commuting(const Values5& v);
System octonions();
Mat octonion_automorphism();

} // namespace oracle
