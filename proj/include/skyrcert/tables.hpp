#ifndef SKYRCERT_TABLES_HPP
#define SKYRCERT_TABLES_HPP

#include <vector>

#include "skyrcert/rational.hpp"

namespace skyr {
namespace tables {

// The exact rational data the certified pipeline runs on. The solver can
// regenerate floating-point candidates for all of it; these embedded values
// are the reference inputs and ship with the library.

// Approximate-soliton expansion coefficients c_n, n = 2..43 (phi basis).
inline std::vector<Rational> skyrmion() {
    static const char* raw[] = {
        "13039/72146",   "2909/229801",   "-11670/500821", "-301/39257",    "621/122813",
        "871/221909",    "-42/55481",     "-64/36275",     "-18/77071",     "94/139483",
        "13/40736",      "-31/158602",    "-9/42953",      "2/100443",      "11/105144",
        "2/76485",       "-5/121747",     "-5/186976",     "1/92977",       "2/118683",
        "1/1805239",     "-1/122146",     "-1/317774",     "1/332077",      "1/377050",
        "-1/1689008",    "-1/640158",     "-1/3975308",    "1/1402566",     "1/2606123",
        "-1/4324868",    "-1/3550160",    "1/54392687",    "1/6563655",     "1/21696717",
        "-1/16289508",   "-1/21329884",   "1/86396283",    "1/36311458",    "1/128282128",
        "-1/128832209",  "-1/196527234"};
    std::vector<Rational> v;
    for (const char* s : raw) v.push_back(rat_parse(s));
    return v;
}

// Fundamental-system coefficients c_{-,n}, n = 2..30 (psi-minus basis);
// c_{-,1} is fixed by the normalization u_-(-1) = 1.
inline std::vector<Rational> fundamental_minus() {
    static const char* raw[] = {
        "5384/2621",  "-711/1909",  "417/3424",   "18/1817",    "2/3169",     "-23/3399",
        "-22/4655",   "4/4097",     "7/2589",     "2/3607",     "-8/6937",    "-3/4310",
        "1/2886",     "2/4135",     "-1/90728",   "-1/3865",    "-1/11699",   "1/9323",
        "1/11955",    "-1/36563",   "-1/18412",   "-1/192414",  "1/37653",    "1/79523",
        "-1/119499",  "-1/105631",  "-1/1857125", "1/285782",   "1/619658"};
    std::vector<Rational> v;
    for (const char* s : raw) v.push_back(rat_parse(s));
    return v;
}

// Fundamental-system coefficients c_{+,n}, n = 2..30 (psi-plus basis);
// c_{+,1} is fixed by the normalization u_+(1) = 1.
inline std::vector<Rational> fundamental_plus() {
    static const char* raw[] = {
        "1371/769",   "1734/3319",  "230/3431",   "-167/6071",  "33/5231",    "59/4580",
        "-19/7202",   "-19/2849",   "1/13495",    "11/3203",    "4/4737",     "-7/4481",
        "-2/2217",    "1/1808",     "1/1529",     "-1/11699",   "-1/2637",    "-1/12409",
        "1/5625",     "1/9479",     "-1/16801",   "-1/12593",   "1/300485",   "1/21636",
        "1/56764",    "-1/51904",   "-1/51451",   "1/307476",   "1/121058"};
    std::vector<Rational> v;
    for (const char* s : raw) v.push_back(rat_parse(s));
    return v;
}

// Chebyshev coefficients of the reciprocal fit used to straighten the
// perturbation-bound denominator P_5; indices 1..30. The leading r_0 is
// kept separate because the published list starts at n = 1.
inline std::vector<Rational> p5_reciprocal_tail() {
    static const char* raw[] = {
        "-437/24",   "-811/20",  "-229/17",  "-2391/61", "-397/30",  "-178/7",
        "-184/27",   "-518/27",  "-98/15",   "-1345/114","-86/31",   "-284/39",
        "-59/24",    "-156/35",  "-107/106", "-86/37",   "-23/31",   "-23/16",
        "-9/26",     "-73/110",  "-5/27",    "-13/32",   "-1/9",     "-2/11",
        "-1/24",     "-3/29",    "-1/29",    "-2/33",    "-1/62",    "-1/47"};
    std::vector<Rational> v;
    for (const char* s : raw) v.push_back(rat_parse(s));
    return v;
}

inline Rational p5_reciprocal_head() { return rat_parse("-623/23"); }

// Full degree-30 Chebyshev fit of 1/P_5.
inline std::vector<Rational> p5_reciprocal() {
    std::vector<Rational> v{p5_reciprocal_head()};
    for (const auto& r : p5_reciprocal_tail()) v.push_back(r);
    return v;
}

// Degree-22 Chebyshev fit of 1/W_0 (Wronskian reciprocal), n = 0..23 as
// published; the final entry is zero.
inline std::vector<Rational> w0_reciprocal() {
    static const char* raw[] = {
        "-19/69",   "11/106",  "37/103",  "-14/107",  "-23/128",  "7/81",
        "9/109",    "-3/67",   "-3/79",   "2/99",     "2/111",    "-1/124",
        "-1/114",   "1/376",   "1/233",   "-1/1792",  "-1/481",   "-1/8890",
        "1/1025",   "1/4569",  "-1/2336", "-1/6718",  "1/5790",   "0"};
    std::vector<Rational> v;
    for (const char* s : raw) v.push_back(rat_parse(s));
    return v;
}

// The 15-term Chebyshev fit of 1/Q used in the residual certificate.
inline std::vector<Rational> q_reciprocal() {
    static const char* raw[] = {
        "11/37",  "-1/23",  "-5/44", "-3/13", "9/44",  "1/12",  "-1/766", "-3/25",
        "1/101",  "1/23",   "1/35",  "-1/36", "-1/66", "1/307", "1/125"};
    std::vector<Rational> v;
    for (const char* s : raw) v.push_back(rat_parse(s));
    return v;
}

}  // namespace tables
}  // namespace skyr

#endif  // SKYRCERT_TABLES_HPP
