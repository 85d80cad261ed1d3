#pragma once

#include <string>
#include <vector>

#include "qwhitney/qlaurent.hpp"

namespace qwhitney {

/// Validation mode of a parameter set. q-mode requires every node
/// alpha_j + j*m to be nonnegative so its q-bracket exists; integer mode
/// (used by the Lah triangles, where no q-bracket is taken) permits negative
/// nodes.
enum class Mode { QMode, IntegerMode };

/// Rule generating the alpha sequence.
struct Preset {
    enum class Kind { Zero, Constant, Affine, Explicit };

    Kind kind = Kind::Zero;
    long long r = 0;                   // Constant
    std::vector<long long> beta;       // Affine: alpha_j = beta_j - j, forces m = 1
    std::vector<long long> values;     // Explicit

    static Preset zero() { return Preset{}; }
    static Preset constant(long long r);
    static Preset affine(std::vector<long long> beta);
    static Preset explicit_list(std::vector<long long> values);

    bool operator==(const Preset&) const = default;
};

/// The parameter pair (m, alpha) together with an explicit capacity N.
/// Nodes are nu_j = alpha_j + j*m for j < N. Validated eagerly at
/// construction, so downstream triangle builders never see partial or
/// out-of-domain sequences. Immutable and freely shareable.
class ParameterSet {
  public:
    ParameterSet(long long m, Preset preset, int capacity, Mode mode = Mode::QMode);

    long long m() const { return m_; }
    int capacity() const { return capacity_; }
    Mode mode() const { return mode_; }
    const Preset& preset() const { return preset_; }

    /// alpha_j; IndexError for j >= capacity.
    long long alpha(int j) const;

    /// The node nu_j = alpha_j + j*m; IndexError for j >= capacity.
    long long node(int j) const;

    /// [nu_j]_q; DomainError if the node is negative (never in q-mode).
    QLaurentPoly q_node(int j) const;

    /// True iff nu_0, ..., nu_upto are pairwise distinct. Requires upto < capacity.
    bool nodes_distinct(int upto) const;

    /// First coinciding node pair (j > i) among nu_0..nu_upto, or {-1,-1}.
    std::pair<int, int> first_duplicate(int upto) const;

    bool operator==(const ParameterSet&) const = default;

  private:
    long long m_;
    Preset preset_;
    int capacity_;
    Mode mode_;
};

/// Parse a CLI alpha specifier:
///   "zero" | "constant:R" | "affine:b0,b1,..." | "explicit:a0,a1,..."
Preset parse_alpha_spec(const std::string& spec);

/// Render a preset back into the CLI specifier grammar.
std::string alpha_spec_string(const Preset& preset);

}  // namespace qwhitney
