#ifndef NONACYCLE_TESTS_REFERENCE_EXAMPLE_HPP
#define NONACYCLE_TESTS_REFERENCE_EXAMPLE_HPP

// The worked 12x12 reference instance and every value published for it:
// the factorization coefficient sequences, the determinant, and the full
// exact inverse. Used by the unit tests and the acceptance suite.

#include <nonacycle/band_matrix.hpp>
#include <nonacycle/big_rational.hpp>
#include <nonacycle/dense_matrix.hpp>

namespace refex {

inline nonacycle::cyclic_nonadiagonal<nonacycle::big_rational> matrix() {
    using nonacycle::big_rational;
    nonacycle::cyclic_nonadiagonal<big_rational> m(12);
    const long d[] = {1, 2, 2, -1, 1, 1, -1, 1, 2, -1, -1, 1};
    const long a[] = {1, 1, 1, 1, -1, 2, 2, 2, 1, -2, 1, 1};
    const long A[] = {-1, 1, 1, 1, -1, -1, 1, 3, 1, 1, 1, 1};
    const long M[] = {2, -1, -1, 1, 1, 1, 1, -1, 1};
    const long z[] = {1, 2, 1, 1, 1, 2, 1, 2};
    const long b[] = {1, -2, 1, 1, 2, 1, 1, 1, -1, 1, 1, -1};
    const long B[] = {1, 1, 1, 2, 1, 1, 2, -1, 1, 3, 3, 1};
    const long N[] = {1, 1, -1, -1, 1, 1, -1, 2, 1};
    const long R[] = {-1, 1, -1, 1, -2, 1, 1, 1};
    for (int i = 1; i <= 12; ++i) {
        m.d(i) = big_rational(d[i - 1]);
        m.a(i) = big_rational(a[i - 1]);
        m.A(i) = big_rational(A[i - 1]);
        m.b(i) = big_rational(b[i - 1]);
        m.B(i) = big_rational(B[i - 1]);
    }
    for (int i = 1; i <= 9; ++i) m.M(i) = big_rational(M[i - 1]);
    for (int i = 1; i <= 8; ++i) m.z(i) = big_rational(z[i - 1]);
    for (int i = 4; i <= 12; ++i) m.N(i) = big_rational(N[i - 4]);
    for (int i = 5; i <= 12; ++i) m.R(i) = big_rational(R[i - 5]);
    return m;
}

inline constexpr long determinant = 4715;

// Published coefficient sequences; index 0 of each array is the sequence's
// first valid index (c_1, f_2, g_3, alpha_4, gamma_5, ...).
inline constexpr const char* c_seq[] = {"1",      "4",     "3",        "-7/2",
                                        "29/21",  "45/58", "-20/3",    "77/50",
                                        "218/77", "-1088/327", "511/544", "-4715/4088"};
inline constexpr const char* f_seq[] = {"-2",      "0",     "3/4",   "-10/21", "33/58",
                                        "8/3",     "-49/300", "38/77", "13/218"};
inline constexpr const char* g_seq[] = {"1",     "1/4",   "1/6",     "1/7",
                                        "44/29", "11/45", "-53/150", "116/77"};
inline constexpr const char* alpha_seq[] = {"1",     "1/2",    "-1/4", "8/21",
                                            "39/58", "-46/45", "52/75"};
inline constexpr const char* gamma_seq[] = {"-1", "1/4", "-1/3", "-2/7", "-42/29", "58/45"};
inline constexpr const char* e_seq[] = {"1",      "-1",     "-1",   "-1/4",  "-26/21",
                                        "163/58", "14/3",   "19/20", "48/77"};
inline constexpr const char* P_seq[] = {"-1",      "5",       "0",    "5/4",
                                        "-22/21",  "-115/58", "-5/3", "541/300"};
inline constexpr const char* T_seq[] = {"2", "1", "-1", "1/4", "31/21", "25/58", "-13/3"};
inline constexpr const char* k_seq[] = {"1",      "-1/4",  "1/4",     "1/7",    "-15/29",
                                        "-4/45",  "-19/300", "137/77", "271/436", "1761/2176"};
inline constexpr const char* w_seq[] = {"1",      "2",      "-1",   "-3/4",   "-4/21",
                                        "-31/58", "8/3",    "-13/25", "106/77", "-268/109"};
inline constexpr const char* h_seq[] = {"1",       "0",      "1/3",      "10/21",
                                        "-37/58",  "-61/45", "-121/300", "3/7",
                                        "44/109",  "-307/1088", "-1146/511"};
inline constexpr const char* v_seq[] = {"1",      "3",      "-1",   "-1",      "-17/21",
                                        "-23/58", "7/3",    "821/300", "-85/77",
                                        "-2723/654", "101/4352"};

// Published inverse, row-major, 12 x 12.
inline constexpr const char* inverse[12][12] = {
    {"231/4715", "199/943", "3154/4715", "-3181/4715", "-2187/4715", "142/4715",
     "1562/4715", "-1998/4715", "-171/943", "-689/4715", "1282/4715", "3032/4715"},
    {"79/943", "-170/943", "-591/943", "643/943", "440/943", "-29/943",
     "-319/943", "76/943", "75/943", "-105/943", "-129/943", "98/943"},
    {"-1172/4715", "15/943", "3062/4715", "-1088/4715", "-416/4715", "96/4715",
     "1056/4715", "-89/4715", "243/943", "1128/4715", "-1524/4715", "456/4715"},
    {"33/205", "46/41", "187/205", "-308/205", "-166/205", "-9/205",
     "106/205", "-139/205", "-42/41", "-157/205", "271/205", "111/205"},
    {"-107/943", "-1608/943", "-620/943", "1600/943", "1111/943", "469/943",
     "-499/943", "852/943", "1486/943", "1503/943", "-2141/943", "-837/943"},
    {"-26/205", "6/41", "126/205", "-99/205", "-68/205", "63/205",
     "78/205", "-52/205", "7/41", "74/205", "-52/205", "43/205"},
    {"896/4715", "629/943", "89/4715", "-1051/4715", "-2482/4715", "-878/4715",
     "-228/4715", "-463/4715", "-749/943", "-3244/4715", "5687/4715", "-1813/4715"},
    {"1147/4715", "2025/943", "4108/4715", "-9202/4715", "-7124/4715", "-3071/4715",
     "3939/4715", "-4471/4715", "-2086/943", "-8973/4715", "13979/4715", "3094/4715"},
    {"-824/4715", "-1412/943", "-3576/4715", "6734/4715", "5903/4715", "1902/4715",
     "-2653/4715", "2657/4715", "1455/943", "5846/4715", "-7798/4715", "-2753/4715"},
    {"-507/4715", "1388/943", "4712/4715", "-8388/4715", "-5426/4715", "-924/4715",
     "3981/4715", "-3269/4715", "-1278/943", "-6142/4715", "7596/4715", "5041/4715"},
    {"1188/4715", "754/943", "1402/4715", "-2888/4715", "-2491/4715", "-1964/4715",
     "1971/4715", "-1519/4715", "-610/943", "-4217/4715", "5246/4715", "101/4715"},
    {"746/4715", "-1276/943", "-4041/4715", "7934/4715", "4143/4715", "132/4715",
     "-3263/4715", "5182/4715", "1395/943", "6266/4715", "-9168/4715", "-4088/4715"}};

inline nonacycle::dense_matrix<nonacycle::big_rational> inverse_matrix() {
    nonacycle::dense_matrix<nonacycle::big_rational> s(12);
    for (int i = 1; i <= 12; ++i)
        for (int j = 1; j <= 12; ++j)
            s(i, j) = nonacycle::big_rational::from_string(inverse[i - 1][j - 1]);
    return s;
}

} // namespace refex

#endif
