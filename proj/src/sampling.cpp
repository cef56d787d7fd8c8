// Copyright 2026 The specboson Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "specboson/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <string>
#include <utility>

#include "specboson/errors.hpp"
#include "specboson/permanent.hpp"

namespace specboson {

unsigned ResolvedOutcome::total() const {
    unsigned n = 0;
    for (const auto& s : per_basis) {
        n += s.total();
    }
    return n;
}

Occupation ResolvedOutcome::spatial_marginal() const {
    if (per_basis.empty()) {
        return {};
    }
    Occupation sum = Occupation::empty(per_basis.front().modes());
    for (const auto& s : per_basis) {
        for (std::size_t j = 0; j < s.modes(); ++j) {
            sum[j] += s[j];
        }
    }
    return sum;
}

std::vector<unsigned> ResolvedOutcome::profile() const {
    std::vector<unsigned> counts;
    counts.reserve(per_basis.size());
    for (const auto& s : per_basis) {
        counts.push_back(s.total());
    }
    return counts;
}

std::vector<std::size_t> default_input_modes(std::size_t photons) {
    std::vector<std::size_t> modes(photons);
    std::iota(modes.begin(), modes.end(), 0);
    return modes;
}

namespace {

using Profile = std::vector<unsigned>;

struct Term {
    Complex chi;
    std::vector<Occupation> t;
};

// Configurations of one lambda bucketed by profile, plus a cache of
// single-spectral-mode amplitudes shared by every query against it.
class Engine {
  public:
    Engine(const Interferometer& u, const LambdaMatrix& lambda, std::span<const std::size_t> inputs,
           const EngineOptions& options)
        : u_(u), lambda_(lambda) {
        const std::size_t m = u.modes();
        if (inputs.size() != lambda.photons()) {
            throw DimensionError("lambda describes " + std::to_string(lambda.photons()) + " photons but " +
                                 std::to_string(inputs.size()) + " input modes were given");
        }
        std::vector<bool> used(m, false);
        for (std::size_t mode : inputs) {
            if (mode >= m) {
                throw ConfigurationError("input mode " + std::to_string(mode) + " outside a " + std::to_string(m) +
                                         "-mode network");
            }
            if (used[mode]) {
                throw ConfigurationError("input modes must be distinct");
            }
            used[mode] = true;
        }
        for (auto& wc : enumerate_configurations(lambda, options.eps, options.max_configurations)) {
            Term term{wc.chi, t_sets(wc.config, inputs, m, lambda.basis_size())};
            Profile profile;
            profile.reserve(term.t.size());
            for (const auto& t : term.t) {
                profile.push_back(t.total());
            }
            groups_[std::move(profile)].push_back(std::move(term));
        }
    }

    const std::map<Profile, std::vector<Term>>& groups() const { return groups_; }
    std::size_t photons() const { return lambda_.photons(); }

    void check_outcome(const ResolvedOutcome& outcome) const {
        if (outcome.per_basis.size() != lambda_.basis_size()) {
            throw DimensionError("resolved outcome has " + std::to_string(outcome.per_basis.size()) +
                                 " spectral modes, lambda has " + std::to_string(lambda_.basis_size()));
        }
        for (const auto& s : outcome.per_basis) {
            if (s.modes() != u_.modes()) {
                throw ConfigurationError("outcome occupation length does not match the network");
            }
        }
        if (outcome.total() != lambda_.photons()) {
            throw ConfigurationError("outcome holds " + std::to_string(outcome.total()) + " photons, expected " +
                                     std::to_string(lambda_.photons()));
        }
    }

    void check_signature(const Occupation& signature) const {
        if (signature.modes() != u_.modes()) {
            throw ConfigurationError("signature length does not match the network");
        }
        if (signature.total() != lambda_.photons()) {
            throw ConfigurationError("signature holds " + std::to_string(signature.total()) + " photons, expected " +
                                     std::to_string(lambda_.photons()));
        }
    }

    Complex group_amplitude(const std::vector<Term>& terms, const ResolvedOutcome& outcome) {
        Complex sum{0.0, 0.0};
        for (const auto& term : terms) {
            Complex product = term.chi;
            for (std::size_t k = 0; k < term.t.size(); ++k) {
                if (term.t[k].total() == 0) {
                    continue;
                }
                product *= cached_amplitude(outcome.per_basis[k], term.t[k]);
            }
            sum += product;
        }
        return sum;
    }

    Complex amplitude(const ResolvedOutcome& outcome) {
        check_outcome(outcome);
        const auto it = groups_.find(outcome.profile());
        if (it == groups_.end()) {
            return {0.0, 0.0};
        }
        return group_amplitude(it->second, outcome);
    }

    double nonresolved(const Occupation& signature) {
        check_signature(signature);
        double total = 0.0;
        for (const auto& [profile, terms] : groups_) {
            for (const auto& outcome : enumerate_partitions(signature, profile)) {
                total += std::norm(group_amplitude(terms, outcome));
            }
        }
        return total;
    }

  private:
    Complex cached_amplitude(const Occupation& out, const Occupation& in) {
        auto key = std::make_pair(out, in);
        const auto it = cache_.find(key);
        if (it != cache_.end()) {
            return it->second;
        }
        const Complex value = amplitude_ideal(u_, out, in);
        cache_.emplace(std::move(key), value);
        return value;
    }

    const Interferometer& u_;
    const LambdaMatrix& lambda_;
    std::map<Profile, std::vector<Term>> groups_;
    std::map<std::pair<Occupation, Occupation>, Complex> cache_;
};

void split_mode(const Occupation& signature, std::size_t mode, std::size_t basis, unsigned left_in_mode,
                std::vector<unsigned>& remaining, ResolvedOutcome& current, std::vector<ResolvedOutcome>& out) {
    const std::size_t basis_count = remaining.size();
    if (basis + 1 == basis_count) {
        if (left_in_mode > remaining[basis]) {
            return;
        }
        current.per_basis[basis][mode] = left_in_mode;
        remaining[basis] -= left_in_mode;
        if (mode + 1 == signature.modes()) {
            out.push_back(current);
        } else {
            split_mode(signature, mode + 1, 0, signature[mode + 1], remaining, current, out);
        }
        remaining[basis] += left_in_mode;
        current.per_basis[basis][mode] = 0;
        return;
    }
    for (unsigned share = std::min(left_in_mode, remaining[basis]) + 1; share-- > 0;) {
        current.per_basis[basis][mode] = share;
        remaining[basis] -= share;
        split_mode(signature, mode, basis + 1, left_in_mode - share, remaining, current, out);
        remaining[basis] += share;
    }
    current.per_basis[basis][mode] = 0;
}

void check_outcome_budget(const Interferometer& u, unsigned photons, const EngineOptions& options) {
    const std::uint64_t count = occupation_count(u.modes(), photons);
    if (count > options.max_outcomes) {
        throw CapacityError("distribution over " + std::to_string(count) + " signatures exceeds cap " +
                            std::to_string(options.max_outcomes));
    }
}

}  // namespace

std::vector<ResolvedOutcome> enumerate_partitions(const Occupation& signature, std::span<const unsigned> profile) {
    std::vector<ResolvedOutcome> out;
    if (profile.empty()) {
        return out;
    }
    const unsigned wanted = std::accumulate(profile.begin(), profile.end(), 0U);
    if (wanted != signature.total()) {
        return out;
    }
    ResolvedOutcome current{std::vector<Occupation>(profile.size(), Occupation::empty(signature.modes()))};
    if (signature.modes() == 0) {
        out.push_back(current);
        return out;
    }
    std::vector<unsigned> remaining(profile.begin(), profile.end());
    split_mode(signature, 0, 0, signature[0], remaining, current, out);
    return out;
}

Complex amplitude_resolved(const Interferometer& u, const LambdaMatrix& lambda, std::span<const std::size_t> inputs,
                           const ResolvedOutcome& outcome, const EngineOptions& options) {
    Engine engine(u, lambda, inputs, options);
    return engine.amplitude(outcome);
}

double probability_resolved(const Interferometer& u, const LambdaMatrix& lambda, std::span<const std::size_t> inputs,
                            const ResolvedOutcome& outcome, const EngineOptions& options) {
    return std::norm(amplitude_resolved(u, lambda, inputs, outcome, options));
}

double probability_nonresolved(const Interferometer& u, const LambdaMatrix& lambda,
                               std::span<const std::size_t> inputs, const Occupation& signature,
                               const EngineOptions& options) {
    Engine engine(u, lambda, inputs, options);
    return engine.nonresolved(signature);
}

double probability_indistinguishable_fast(const Interferometer& u, const Occupation& signature,
                                          const Occupation& input) {
    return std::norm(amplitude_ideal(u, signature, input));
}

double probability_distinguishable_fast(const Interferometer& u, const Occupation& signature,
                                        const Occupation& input) {
    if (!signature.collision_free() || !input.collision_free()) {
        throw ConfigurationError("distinguishable fast path needs collision-free signature and input");
    }
    ComplexMatrix sub = submatrix(u, signature, input);
    for (std::size_t r = 0; r < sub.rows(); ++r) {
        for (auto& z : sub.row(r)) {
            z = std::norm(z);
        }
    }
    return permanent_ryser(sub).real();
}

std::vector<SignatureProbability> distribution_nonresolved(const Interferometer& u, const LambdaMatrix& lambda,
                                                           std::span<const std::size_t> inputs,
                                                           const EngineOptions& options) {
    const auto n = static_cast<unsigned>(lambda.photons());
    check_outcome_budget(u, n, options);
    Engine engine(u, lambda, inputs, options);
    std::vector<SignatureProbability> out;
    for (auto& signature : enumerate_occupations(u.modes(), n)) {
        const double p = engine.nonresolved(signature);
        out.push_back({std::move(signature), p});
    }
    return out;
}

std::vector<ResolvedProbability> distribution_resolved(const Interferometer& u, const LambdaMatrix& lambda,
                                                       std::span<const std::size_t> inputs,
                                                       const EngineOptions& options) {
    const auto n = static_cast<unsigned>(lambda.photons());
    check_outcome_budget(u, n, options);
    Engine engine(u, lambda, inputs, options);
    const auto signatures = enumerate_occupations(u.modes(), n);
    std::vector<ResolvedProbability> out;
    for (const auto& [profile, terms] : engine.groups()) {
        for (const auto& signature : signatures) {
            for (auto& outcome : enumerate_partitions(signature, profile)) {
                const double p = std::norm(engine.group_amplitude(terms, outcome));
                out.push_back({std::move(outcome), p});
            }
        }
        if (out.size() > options.max_outcomes) {
            throw CapacityError("resolved distribution exceeds " + std::to_string(options.max_outcomes) +
                                " outcomes");
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.outcome < b.outcome; });
    return out;
}

MixedPhoton::MixedPhoton(std::vector<MixtureComponent> components) : components_(std::move(components)) {
    if (components_.empty()) {
        throw InputError("mixed photon needs at least one component");
    }
    double sum = 0.0;
    for (const auto& c : components_) {
        if (!(c.probability >= 0.0) || !std::isfinite(c.probability)) {
            throw InputError("mixture probabilities must be finite and non-negative");
        }
        sum += c.probability;
    }
    if (std::abs(sum - 1.0) > kMixtureWeightTolerance) {
        throw InputError("mixture probabilities sum to " + std::to_string(sum) + ", not 1");
    }
}

MixedPhoton MixedPhoton::pure(SpectralSpec spectrum) {
    return MixedPhoton({MixtureComponent{1.0, std::move(spectrum)}});
}

std::uint64_t mixture_term_count(std::span<const MixedPhoton> photons) {
    std::uint64_t count = 1;
    for (const auto& photon : photons) {
        const std::uint64_t q = photon.components().size();
        if (count > std::numeric_limits<std::uint64_t>::max() / q) {
            return std::numeric_limits<std::uint64_t>::max();
        }
        count *= q;
    }
    return count;
}

void for_each_mixture_term(std::span<const MixedPhoton> photons, const EngineOptions& options,
                           const std::function<void(std::span<const SpectralSpec>, double)>& visit) {
    if (photons.empty()) {
        throw InputError("need at least one photon");
    }
    const std::uint64_t terms = mixture_term_count(photons);
    if (terms > options.max_mixture_terms) {
        throw CapacityError("mixture expands into " + std::to_string(terms) + " pure terms, cap is " +
                            std::to_string(options.max_mixture_terms));
    }
    const std::size_t n = photons.size();
    std::vector<std::size_t> index(n, 0);
    std::vector<SpectralSpec> specs;
    specs.reserve(n);
    while (true) {
        specs.clear();
        double weight = 1.0;
        for (std::size_t p = 0; p < n; ++p) {
            const auto& component = photons[p].components()[index[p]];
            weight *= component.probability;
            specs.push_back(component.spectrum);
        }
        if (weight > 0.0) {
            visit(std::span<const SpectralSpec>(specs), weight);
        }
        std::size_t p = n;
        while (p > 0) {
            --p;
            if (++index[p] < photons[p].components().size()) {
                break;
            }
            index[p] = 0;
            if (p == 0) {
                return;
            }
        }
    }
}

namespace {

void require_shared_basis(std::span<const MixedPhoton> photons) {
    for (const auto& photon : photons) {
        for (const auto& c : photon.components()) {
            if (!std::holds_alternative<CoefficientRow>(c.spectrum)) {
                throw RepresentationError(
                    "resolved detection of mixed photons needs coefficient rows in a declared basis");
            }
        }
    }
}

}  // namespace

double probability_mixed(const Interferometer& u, std::span<const MixedPhoton> photons,
                         std::span<const std::size_t> inputs, const Occupation& signature,
                         const EngineOptions& options) {
    double total = 0.0;
    for_each_mixture_term(photons, options, [&](std::span<const SpectralSpec> specs, double weight) {
        const LambdaMatrix lambda = lambda_from_photons(specs);
        total += weight * probability_nonresolved(u, lambda, inputs, signature, options);
    });
    return total;
}

double probability_mixed(const Interferometer& u, std::span<const MixedPhoton> photons,
                         std::span<const std::size_t> inputs, const ResolvedOutcome& outcome,
                         const EngineOptions& options) {
    require_shared_basis(photons);
    double total = 0.0;
    for_each_mixture_term(photons, options, [&](std::span<const SpectralSpec> specs, double weight) {
        const LambdaMatrix lambda = lambda_from_photons(specs);
        total += weight * probability_resolved(u, lambda, inputs, outcome, options);
    });
    return total;
}

std::vector<SignatureProbability> distribution_mixed_nonresolved(const Interferometer& u,
                                                                 std::span<const MixedPhoton> photons,
                                                                 std::span<const std::size_t> inputs,
                                                                 const EngineOptions& options) {
    std::vector<SignatureProbability> total;
    for_each_mixture_term(photons, options, [&](std::span<const SpectralSpec> specs, double weight) {
        const LambdaMatrix lambda = lambda_from_photons(specs);
        auto part = distribution_nonresolved(u, lambda, inputs, options);
        if (total.empty()) {
            total = std::move(part);
            for (auto& entry : total) {
                entry.probability *= weight;
            }
            return;
        }
        for (std::size_t i = 0; i < part.size(); ++i) {
            total[i].probability += weight * part[i].probability;
        }
    });
    return total;
}

std::vector<ResolvedProbability> distribution_mixed_resolved(const Interferometer& u,
                                                             std::span<const MixedPhoton> photons,
                                                             std::span<const std::size_t> inputs,
                                                             const EngineOptions& options) {
    require_shared_basis(photons);
    std::map<ResolvedOutcome, double> total;
    for_each_mixture_term(photons, options, [&](std::span<const SpectralSpec> specs, double weight) {
        const LambdaMatrix lambda = lambda_from_photons(specs);
        for (auto& entry : distribution_resolved(u, lambda, inputs, options)) {
            total[std::move(entry.outcome)] += weight * entry.probability;
        }
    });
    std::vector<ResolvedProbability> out;
    out.reserve(total.size());
    for (auto& [outcome, p] : total) {
        out.push_back({outcome, p});
    }
    return out;
}

}  // namespace specboson
