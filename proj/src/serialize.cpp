#include "qwhitney/serialize.hpp"

#include <sstream>

namespace qwhitney {

Json poly_to_json(const QLaurentPoly& p) {
    Json j = Json::object();
    for (const auto& [exp, c] : p.terms()) {
        j[std::to_string(exp)] = c.str();
    }
    return j;
}

QLaurentPoly poly_from_json(const Json& j) {
    if (!j.is_object()) {
        throw DomainError("polynomial JSON must be an object of exponent -> coefficient");
    }
    std::map<int, Int> terms;
    for (const auto& [key, value] : j.items()) {
        int exp = 0;
        try {
            std::size_t pos = 0;
            exp = std::stoi(key, &pos);
            if (pos != key.size()) {
                throw std::invalid_argument(key);
            }
        } catch (const std::exception&) {
            throw DomainError("bad exponent key '" + key + "' in polynomial JSON");
        }
        if (!value.is_string()) {
            throw DomainError("coefficient for exponent " + key + " must be a decimal string");
        }
        try {
            terms[exp] = Int(value.get<std::string>());
        } catch (const std::exception&) {
            throw DomainError("bad coefficient '" + value.get<std::string>() + "' in polynomial JSON");
        }
    }
    return QLaurentPoly::from_terms(terms);
}

Json params_to_json(const ParameterSet& p) {
    Json alpha = Json::object();
    switch (p.preset().kind) {
        case Preset::Kind::Zero:
            alpha["preset"] = "zero";
            break;
        case Preset::Kind::Constant:
            alpha["preset"] = "constant";
            alpha["r"] = p.preset().r;
            break;
        case Preset::Kind::Affine:
            alpha["preset"] = "affine";
            alpha["beta"] = p.preset().beta;
            break;
        case Preset::Kind::Explicit:
            alpha["preset"] = "explicit";
            alpha["values"] = p.preset().values;
            break;
    }
    return Json{{"m", p.m()}, {"alpha", std::move(alpha)}, {"n", p.capacity()}};
}

ParameterSet params_from_json(const Json& j, Mode mode) {
    if (!j.contains("m") || !j.contains("alpha") || !j.contains("n")) {
        throw DomainError("parameter JSON requires fields m, alpha, n");
    }
    const long long m = j.at("m").get<long long>();
    const int n = j.at("n").get<int>();
    const Json& alpha = j.at("alpha");
    const std::string kind = alpha.at("preset").get<std::string>();
    Preset preset;
    if (kind == "zero") {
        preset = Preset::zero();
    } else if (kind == "constant") {
        preset = Preset::constant(alpha.at("r").get<long long>());
    } else if (kind == "affine") {
        preset = Preset::affine(alpha.at("beta").get<std::vector<long long>>());
    } else if (kind == "explicit") {
        preset = Preset::explicit_list(alpha.at("values").get<std::vector<long long>>());
    } else {
        throw DomainError("unknown alpha preset '" + kind + "' in parameter JSON");
    }
    return ParameterSet(m, std::move(preset), n, mode);
}

namespace {

template <typename T, typename EntryFn>
Json triangle_json_impl(const std::string& kind, const ParameterSet& p, const Triangle<T>& t,
                        EntryFn entry) {
    Json rows = Json::array();
    for (int n = 0; n < t.rows(); ++n) {
        Json row = Json::array();
        for (int k = 0; k <= n; ++k) {
            row.push_back(entry(t.at(n, k)));
        }
        rows.push_back(std::move(row));
    }
    return Json{{"kind", kind}, {"params", params_to_json(p)}, {"rows", std::move(rows)}};
}

template <typename T, typename RenderFn>
std::string triangle_csv_impl(const Triangle<T>& t, RenderFn render) {
    std::string out = "n,k,value\n";
    for (int n = 0; n < t.rows(); ++n) {
        for (int k = 0; k <= n; ++k) {
            out += std::to_string(n) + "," + std::to_string(k) + "," + render(t.at(n, k)) + "\n";
        }
    }
    return out;
}

template <typename T, typename RenderFn>
std::string triangle_latex_impl(const Triangle<T>& t, RenderFn render) {
    std::string out = "\\begin{pmatrix}\n";
    for (int n = 0; n < t.rows(); ++n) {
        for (int k = 0; k < t.rows(); ++k) {
            if (k) {
                out += " & ";
            }
            out += k <= n ? render(t.at(n, k)) : "0";
        }
        out += " \\\\\n";
    }
    out += "\\end{pmatrix}\n";
    return out;
}

}  // namespace

Json triangle_to_json(const std::string& kind, const ParameterSet& p,
                      const Triangle<QLaurentPoly>& t) {
    return triangle_json_impl(kind, p, t, [](const QLaurentPoly& e) { return poly_to_json(e); });
}

Json triangle_to_json(const std::string& kind, const ParameterSet& p, const IntTriangle& t) {
    return triangle_json_impl(kind, p, t, [](const Int& e) { return Json(e.str()); });
}

Triangle<QLaurentPoly> poly_triangle_from_json(const Json& j) {
    const Json& rows = j.at("rows");
    Triangle<QLaurentPoly> t(static_cast<int>(rows.size()));
    for (int n = 0; n < t.rows(); ++n) {
        const Json& row = rows.at(static_cast<std::size_t>(n));
        if (static_cast<int>(row.size()) != n + 1) {
            throw DomainError("triangle row " + std::to_string(n) + " has " +
                              std::to_string(row.size()) + " entries, expected " +
                              std::to_string(n + 1));
        }
        for (int k = 0; k <= n; ++k) {
            t.entry(n, k) = poly_from_json(row.at(static_cast<std::size_t>(k)));
        }
    }
    return t;
}

IntTriangle int_triangle_from_json(const Json& j) {
    const Json& rows = j.at("rows");
    IntTriangle t(static_cast<int>(rows.size()));
    for (int n = 0; n < t.rows(); ++n) {
        const Json& row = rows.at(static_cast<std::size_t>(n));
        if (static_cast<int>(row.size()) != n + 1) {
            throw DomainError("triangle row " + std::to_string(n) + " has " +
                              std::to_string(row.size()) + " entries, expected " +
                              std::to_string(n + 1));
        }
        for (int k = 0; k <= n; ++k) {
            t.entry(n, k) = Int(row.at(static_cast<std::size_t>(k)).get<std::string>());
        }
    }
    return t;
}

std::string triangle_to_csv(const Triangle<QLaurentPoly>& t) {
    return triangle_csv_impl(t, [](const QLaurentPoly& e) { return e.to_string(); });
}

std::string triangle_to_csv(const IntTriangle& t) {
    return triangle_csv_impl(t, [](const Int& e) { return e.str(); });
}

std::string triangle_to_latex(const Triangle<QLaurentPoly>& t) {
    return triangle_latex_impl(t, [](const QLaurentPoly& e) { return e.to_latex(); });
}

std::string triangle_to_latex(const IntTriangle& t) {
    return triangle_latex_impl(t, [](const Int& e) { return e.str(); });
}

Json series_to_json(int k, const whitney_second::SeriesT& s) {
    Json coeffs = Json::array();
    for (const auto& c : s.coeffs) {
        coeffs.push_back(poly_to_json(c));
    }
    return Json{{"kind", "ogf"}, {"k", k}, {"order", s.order}, {"coeffs", std::move(coeffs)}};
}

Json check_report_to_json(const std::string& check, const ParameterSet& p, int dim,
                          const CheckResult& result) {
    Json j{{"check", check}, {"params", params_to_json(p)}, {"dim", dim}, {"ok", result.ok}};
    if (result.first_failure) {
        const Failure& f = *result.first_failure;
        j["first_failure"] = Json{{"n", f.n}, {"k", f.k}, {"lhs", f.lhs}, {"rhs", f.rhs}};
    } else {
        j["first_failure"] = nullptr;
    }
    return j;
}

}  // namespace qwhitney
