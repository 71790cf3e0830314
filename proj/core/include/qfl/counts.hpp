#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace qfl {

struct CountTable {
    int n = 0;
    std::vector<mpz_class> by_k;

    mpz_class total() const;
    std::string str() const;
    bool operator==(const CountTable& o) const { return n == o.n && by_k == o.by_k; }
};

class CountMismatch : public std::runtime_error {
public:
    CountMismatch(const std::string& what, CountTable closed, CountTable enumerated);
    CountTable closed_form;
    CountTable enumerated;
};

mpz_class binomial(long n, long k);
mpz_class catalan(int n);
// 1, 2, 6, 22, 90, ...
mpz_class large_schroeder(int n);

// f_{n,k}: faces by black nodes
mpz_class face_number(int n, int k);
// c_{n,k}: indexed forests by internal nodes
mpz_class forest_number(int n, int k);

CountTable faces_closed_form(int n);
CountTable forests_closed_form(int n);
CountTable faces_by_enumeration(int n);
CountTable forests_by_enumeration(int n);
// both routes; throws CountMismatch when they differ
CountTable count_faces(int n);
CountTable count_forests(int n);

// prod_{k=1}^n (k + (k-1) t)
CountTable hhmp_closed_form(int n);
// words made of r- and e letters only, by number of e letters
CountTable hhmp_by_words(int n);

// coefficients in q, lowest degree first
using QPoly = std::vector<mpz_class>;
struct FqCount {
    int n = 0;
    QPoly by_forests;  // sum_k c_{n,k} q^k
    QPoly by_faces;    // sum_k f_{n,k} (q-1)^k
    bool agree() const { return by_forests == by_faces; }
    std::string str() const;
};
FqCount fq_count(int n);

}  // namespace qfl
