#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "gpdrift/graph.hpp"
#include "gpdrift/piling.hpp"
#include "gpdrift/vertex_group.hpp"

namespace gpdrift {

/// Step distribution nu of the alternating walk. Samples are never trivial.
class NuSampler {
public:
    virtual ~NuSampler() = default;
    virtual Word sample(Rng& rng) const = 0;
    virtual std::string describe() const = 0;
};

class FixedWordSampler final : public NuSampler {
public:
    /// Throws Error{invalid_argument} if w represents the identity.
    FixedWordSampler(Word w, const Graph& graph, const VertexGroupSpec& groups);
    Word sample(Rng&) const override { return word_; }
    std::string describe() const override { return "fixed"; }

private:
    Word word_;
};

class WordListSampler final : public NuSampler {
public:
    /// Uniform over `words`; every word must be a nontrivial element.
    WordListSampler(std::vector<Word> words, const Graph& graph, const VertexGroupSpec& groups);
    Word sample(Rng& rng) const override;
    std::string describe() const override { return "list"; }

private:
    std::vector<Word> words_;
};

/// One syllable at a uniform vertex whose generator exponent has
/// Pareto(alpha) magnitude and uniform sign. Magnitudes are capped at
/// `max_magnitude` so that products of merged syllables stay in 64 bits.
class ParetoLetterSampler final : public NuSampler {
public:
    static constexpr std::int64_t default_max_magnitude = std::int64_t{1} << 40;

    ParetoLetterSampler(double alpha, std::shared_ptr<const VertexGroupSpec> groups,
                        std::int64_t max_magnitude = default_max_magnitude);
    Word sample(Rng& rng) const override;
    std::string describe() const override { return "pareto"; }

private:
    double alpha_;
    std::shared_ptr<const VertexGroupSpec> groups_;
    std::int64_t max_magnitude_;
};

/// "fixed:<word>", "list:<path>" (one word per line), "letters:" (uniform
/// over generator letters v^1, v^-1 at every vertex) or "pareto:<alpha>".
std::shared_ptr<const NuSampler> parse_nu(std::string_view spec, const Graph& graph,
                                          std::shared_ptr<const VertexGroupSpec> groups);

struct WalkConfig {
    std::shared_ptr<const Graph> graph;
    std::shared_ptr<const VertexGroupSpec> groups;
    std::shared_ptr<const NuSampler> nu;
    std::int64_t steps = 0;
    std::uint64_t seed = 0;
};

/// One step k of Z_k = s_1 w_1 ... s_k w_k.
struct WalkStep {
    Syllable s;
    Word w;
    Piling half;  // Pi(Z_{k-1} s_k)
    Piling full;  // Pi(Z_k)
    bool local_geodesic = false;
};

struct PivotEntry {
    std::int64_t time = 0;
    Piling anchor;  // Pi(Z_{time-1} s_time)
};

/// Recorded walk. Anchors on the pivot stack are nested: each is a prefix of
/// the one above it, so prefix failures always pop a suffix of the stack.
class WalkTrace {
public:
    WalkTrace(std::shared_ptr<const Graph> graph, std::shared_ptr<const VertexGroupSpec> groups);

    std::int64_t length() const noexcept { return static_cast<std::int64_t>(steps_.size()); }
    const Graph& graph() const noexcept { return *graph_; }
    const VertexGroupSpec& groups() const noexcept { return *groups_; }
    const std::shared_ptr<const Graph>& graph_ptr() const noexcept { return graph_; }
    const std::shared_ptr<const VertexGroupSpec>& groups_ptr() const noexcept { return groups_; }

    const WalkStep& step(std::int64_t k) const { return steps_.at(static_cast<std::size_t>(k - 1)); }
    /// Pi(Z_k); k = 0 gives the empty piling.
    const Piling& full(std::int64_t k) const { return k == 0 ? origin_ : step(k).full; }
    const Piling& half(std::int64_t k) const { return step(k).half; }

    const std::vector<PivotEntry>& pivot_stack() const noexcept { return stack_; }
    /// A_k = number of times pivotal with respect to k, for k = 0..length().
    const std::vector<std::int64_t>& pivotal_counts() const noexcept { return counts_; }

    std::vector<Syllable> s_sequence() const;
    std::vector<Word> w_sequence() const;

    /// Appends step k = length()+1 and updates the pivot stack at both
    /// checkpoints. Throws Error{invalid_argument} if w is trivial.
    void extend(const Syllable& s, const Word& w);

    /// Pops every anchor that is not a prefix of `checkpoint`.
    void update_pivotals(const Piling& checkpoint);

private:
    std::shared_ptr<const Graph> graph_;
    std::shared_ptr<const VertexGroupSpec> groups_;
    Piling origin_;
    std::vector<WalkStep> steps_;
    std::vector<PivotEntry> stack_;
    std::vector<std::int64_t> counts_;
};

struct PivotalReport {
    std::vector<std::int64_t> pivotal_times;
    std::int64_t A_n = 0;
    std::int64_t syllable_length_Zn = 0;
};

Syllable sample_mu(const Graph& graph, const VertexGroupSpec& groups, Rng& rng);

/// Deterministic in cfg.seed: s_k is drawn before w_k at every step.
WalkTrace run_walk(const WalkConfig& cfg);

/// Rebuilds a trace from explicit increments.
WalkTrace replay(std::shared_ptr<const Graph> graph, std::shared_ptr<const VertexGroupSpec> groups,
                 const std::vector<Syllable>& s, const std::vector<Word>& w);

/// vertex(s) is not in term(F_prev), and term(F_prev s) misses init(Pi(w)).
bool is_local_geodesic(const Piling& prev, const Syllable& s, const Word& w, const Graph& graph,
                       const VertexGroupSpec& groups);

/// vertex(s) is not in term(F_prev) and lies outside N1(init(Pi(w))).
bool is_strong_pivot_choice(const Piling& prev, const Syllable& s, const Word& w, const Graph& graph,
                            const VertexGroupSpec& groups);

/// Number of vertices v for which every syllable at v is a strong choice.
std::int64_t count_strong_vertices(const Piling& prev, const Word& w, const Graph& graph,
                                   const VertexGroupSpec& groups);

/// Pivotal times with respect to the full trace length (1 <= k < n).
std::vector<std::int64_t> pivotal_times(const WalkTrace& trace);

/// Direct scan of the definition over stored pilings, O(n^2) prefix tests.
std::vector<std::int64_t> pivotal_times_bruteforce(const WalkTrace& trace, std::int64_t n);

PivotalReport pivotal_report(const WalkTrace& trace);

/// Replaces s_k by `replacement` and replays. Requires k pivotal and the
/// replacement a strong choice at time k (Error{invalid_argument} otherwise).
WalkTrace pivot_replace(const WalkTrace& trace, std::int64_t k, const Syllable& replacement);

/// Debug export: rendered increments, pilings and the pivot stack.
std::string trace_to_json(const WalkTrace& trace);

}  // namespace gpdrift
