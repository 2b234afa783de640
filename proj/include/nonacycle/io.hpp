#ifndef NONACYCLE_IO_HPP
#define NONACYCLE_IO_HPP

#include <algorithm>
#include <cstdio>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "band_matrix.hpp"
#include "big_rational.hpp"
#include "dense_matrix.hpp"
#include "errors.hpp"
#include "one_based.hpp"

namespace nonacycle {

// File format for a cyclic nonadiagonal matrix:
//
//   {"n": 12, "bands": {"d": [...], "a": [...], "A": [...], "M": [...],
//                       "z": [...], "b": [...], "B": [...], "N": [...],
//                       "R": [...]}}
//
// Band arrays list their valid entries in increasing index order (d, a, A,
// b, B carry n values; M, N carry n-3; z, R carry n-4). A value is a JSON
// integer or a string "p/q". The wrap cells are not separate fields: b[1],
// B[1], B[2], a[n], A[n-1] and A[n] are the wrap values by definition.

namespace detail {

inline int line_of_offset(std::string_view text, std::size_t byte) {
    return 1 + static_cast<int>(std::count(text.begin(),
                                           text.begin() + static_cast<std::ptrdiff_t>(
                                                              std::min(byte, text.size())),
                                           '\n'));
}

inline big_rational cell_from_json(const nlohmann::json& v) {
    if (v.is_number_integer())
        return big_rational(static_cast<long>(v.get<std::int64_t>()));
    if (v.is_string()) return big_rational::from_string(v.get<std::string>());
    throw syntax_error(0, "matrix values must be integers or \"p/q\" strings, got " + v.dump());
}

inline void fill_band(const nlohmann::json& bands, const char* name, one_based<big_rational>& out) {
    if (!bands.contains(name))
        throw syntax_error(0, std::string("missing band \"") + name + "\"");
    const nlohmann::json& arr = bands.at(name);
    if (!arr.is_array())
        throw syntax_error(0, std::string("band \"") + name + "\" must be an array");
    if (static_cast<int>(arr.size()) != out.size())
        throw bad_band_length(name, out.size(), static_cast<int>(arr.size()));
    int i = out.first();
    for (const auto& v : arr) out(i++) = cell_from_json(v);
}

} // namespace detail

inline cyclic_nonadiagonal<big_rational> parse_matrix(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& err) {
        throw syntax_error(detail::line_of_offset(text, err.byte), err.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("bands"))
        throw syntax_error(0, "expected an object with \"n\" and \"bands\"");
    if (!doc.at("n").is_number_integer())
        throw syntax_error(0, "\"n\" must be an integer");
    const long n = doc.at("n").get<long>();
    if (n < min_band_order)
        throw order_too_small(static_cast<int>(n), min_band_order,
                              "the nine-band file format starts at this order");
    if (n > 1000000) throw syntax_error(0, "order " + std::to_string(n) + " is out of range");
    const nlohmann::json& bands = doc.at("bands");
    if (!bands.is_object()) throw syntax_error(0, "\"bands\" must be an object");
    static const char* known[] = {"d", "a", "A", "M", "z", "b", "B", "N", "R"};
    for (auto it = bands.begin(); it != bands.end(); ++it) {
        bool ok = false;
        for (const char* name : known) ok = ok || it.key() == name;
        if (!ok) throw syntax_error(0, "unknown band \"" + it.key() + "\"");
    }

    cyclic_nonadiagonal<big_rational> m(static_cast<int>(n));
    detail::fill_band(bands, "d", m.d);
    detail::fill_band(bands, "a", m.a);
    detail::fill_band(bands, "A", m.A);
    detail::fill_band(bands, "M", m.M);
    detail::fill_band(bands, "z", m.z);
    detail::fill_band(bands, "b", m.b);
    detail::fill_band(bands, "B", m.B);
    detail::fill_band(bands, "N", m.N);
    detail::fill_band(bands, "R", m.R);
    return m;
}

namespace detail {

inline nlohmann::ordered_json cell_to_json(const big_rational& x) {
    if (x.is_integer()) {
        const mpz_class num = x.numerator();
        if (num.fits_slong_p()) return nlohmann::ordered_json(num.get_si());
    }
    return nlohmann::ordered_json(x.to_string());
}

inline nlohmann::ordered_json band_to_json(const one_based<big_rational>& band) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& v : band.values()) arr.push_back(cell_to_json(v));
    return arr;
}

} // namespace detail

// Canonical rendering; parse(serialize(m)) reproduces m exactly.
inline std::string serialize_matrix(const cyclic_nonadiagonal<big_rational>& m) {
    nlohmann::ordered_json doc;
    doc["n"] = m.n;
    nlohmann::ordered_json bands;
    bands["d"] = detail::band_to_json(m.d);
    bands["a"] = detail::band_to_json(m.a);
    bands["A"] = detail::band_to_json(m.A);
    bands["M"] = detail::band_to_json(m.M);
    bands["z"] = detail::band_to_json(m.z);
    bands["b"] = detail::band_to_json(m.b);
    bands["B"] = detail::band_to_json(m.B);
    bands["N"] = detail::band_to_json(m.N);
    bands["R"] = detail::band_to_json(m.R);
    doc["bands"] = bands;
    return doc.dump(2) + "\n";
}

namespace detail {

inline std::string double_to_string(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

inline std::string cell_text(const big_rational& x) { return x.to_string(); }
inline std::string cell_text(double x) { return double_to_string(x); }

} // namespace detail

// Dense output: a JSON array of n arrays of n strings, one row per line.
template <typename T>
std::string render_dense_json(const dense_matrix<T>& m) {
    std::string out = "[\n";
    for (int i = 1; i <= m.order(); ++i) {
        out += "  [";
        for (int j = 1; j <= m.order(); ++j) {
            if (j > 1) out += ", ";
            out += "\"" + detail::cell_text(m(i, j)) + "\"";
        }
        out += i < m.order() ? "],\n" : "]\n";
    }
    out += "]\n";
    return out;
}

template <typename T>
std::string render_dense_csv(const dense_matrix<T>& m) {
    std::string out;
    for (int i = 1; i <= m.order(); ++i) {
        for (int j = 1; j <= m.order(); ++j) {
            if (j > 1) out += ",";
            out += detail::cell_text(m(i, j));
        }
        out += "\n";
    }
    return out;
}

} // namespace nonacycle

#endif
