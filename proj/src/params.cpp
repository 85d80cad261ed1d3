#include "qwhitney/params.hpp"

#include <sstream>

#include "qwhitney/qcalc.hpp"

namespace qwhitney {

Preset Preset::constant(long long r) {
    Preset p;
    p.kind = Kind::Constant;
    p.r = r;
    return p;
}

Preset Preset::affine(std::vector<long long> beta) {
    Preset p;
    p.kind = Kind::Affine;
    p.beta = std::move(beta);
    return p;
}

Preset Preset::explicit_list(std::vector<long long> values) {
    Preset p;
    p.kind = Kind::Explicit;
    p.values = std::move(values);
    return p;
}

ParameterSet::ParameterSet(long long m, Preset preset, int capacity, Mode mode)
    : m_(m), preset_(std::move(preset)), capacity_(capacity), mode_(mode) {
    if (m_ < 0) {
        throw DomainError("m must be nonnegative, got " + std::to_string(m_));
    }
    if (capacity_ < 0) {
        throw DomainError("capacity must be nonnegative, got " + std::to_string(capacity_));
    }
    switch (preset_.kind) {
        case Preset::Kind::Affine:
            if (m_ != 1) {
                throw DomainError("affine preset forces m = 1, got m = " + std::to_string(m_));
            }
            if (static_cast<int>(preset_.beta.size()) < capacity_) {
                throw DomainError("affine preset supplies " + std::to_string(preset_.beta.size()) +
                                  " betas for capacity " + std::to_string(capacity_));
            }
            break;
        case Preset::Kind::Explicit:
            if (static_cast<int>(preset_.values.size()) < capacity_) {
                throw DomainError("explicit alpha list of length " +
                                  std::to_string(preset_.values.size()) +
                                  " is shorter than capacity " + std::to_string(capacity_));
            }
            break;
        default:
            break;
    }
    if (mode_ == Mode::QMode) {
        for (int j = 0; j < capacity_; ++j) {
            const long long nu = node(j);
            if (nu < 0) {
                throw DomainError("q-mode requires nonnegative nodes; node " +
                                  std::to_string(j) + " is " + std::to_string(nu));
            }
        }
    }
}

long long ParameterSet::alpha(int j) const {
    if (j < 0 || j >= capacity_) {
        throw IndexError("alpha index " + std::to_string(j) + " outside capacity " +
                         std::to_string(capacity_));
    }
    switch (preset_.kind) {
        case Preset::Kind::Zero:
            return 0;
        case Preset::Kind::Constant:
            return preset_.r;
        case Preset::Kind::Affine:
            return preset_.beta[static_cast<std::size_t>(j)] - j;
        case Preset::Kind::Explicit:
            return preset_.values[static_cast<std::size_t>(j)];
    }
    throw Error("unreachable preset kind");
}

long long ParameterSet::node(int j) const { return alpha(j) + static_cast<long long>(j) * m_; }

QLaurentPoly ParameterSet::q_node(int j) const {
    const long long nu = node(j);
    if (nu < 0) {
        throw DomainError("negative node nu_" + std::to_string(j) + " = " + std::to_string(nu) +
                          " has no q-bracket");
    }
    return q_number(nu);
}

bool ParameterSet::nodes_distinct(int upto) const { return first_duplicate(upto).first < 0; }

std::pair<int, int> ParameterSet::first_duplicate(int upto) const {
    if (upto >= capacity_) {
        throw IndexError("nodes_distinct range " + std::to_string(upto) + " outside capacity " +
                         std::to_string(capacity_));
    }
    for (int j = 1; j <= upto; ++j) {
        for (int i = 0; i < j; ++i) {
            if (node(j) == node(i)) {
                return {j, i};
            }
        }
    }
    return {-1, -1};
}

namespace {

std::vector<long long> parse_int_list(const std::string& body, const std::string& what) {
    std::vector<long long> out;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            out.push_back(std::stoll(item, &pos));
            if (pos != item.size()) {
                throw std::invalid_argument(item);
            }
        } catch (const std::exception&) {
            throw DomainError("bad integer '" + item + "' in " + what + " list");
        }
    }
    if (out.empty()) {
        throw DomainError("empty " + what + " list");
    }
    return out;
}

}  // namespace

Preset parse_alpha_spec(const std::string& spec) {
    if (spec == "zero") {
        return Preset::zero();
    }
    const auto colon = spec.find(':');
    const std::string head = spec.substr(0, colon);
    const std::string body = colon == std::string::npos ? "" : spec.substr(colon + 1);
    if (head == "constant") {
        const auto vals = parse_int_list(body, "constant");
        if (vals.size() != 1) {
            throw DomainError("constant preset takes exactly one value");
        }
        return Preset::constant(vals[0]);
    }
    if (head == "affine") {
        return Preset::affine(parse_int_list(body, "affine"));
    }
    if (head == "explicit") {
        return Preset::explicit_list(parse_int_list(body, "explicit"));
    }
    throw DomainError("unknown alpha spec '" + spec + "'");
}

std::string alpha_spec_string(const Preset& preset) {
    auto join = [](const std::vector<long long>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) {
                s += ',';
            }
            s += std::to_string(v[i]);
        }
        return s;
    };
    switch (preset.kind) {
        case Preset::Kind::Zero:
            return "zero";
        case Preset::Kind::Constant:
            return "constant:" + std::to_string(preset.r);
        case Preset::Kind::Affine:
            return "affine:" + join(preset.beta);
        case Preset::Kind::Explicit:
            return "explicit:" + join(preset.values);
    }
    throw Error("unreachable preset kind");
}

}  // namespace qwhitney
