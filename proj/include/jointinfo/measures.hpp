#ifndef JOINTINFO_MEASURES_HPP_
#define JOINTINFO_MEASURES_HPP_

#include <span>
#include <string_view>

#include "jointinfo/pmf.hpp"

// Information functionals in nats. Every sum uses 0 log 0 = 0 per term, so
// they apply unchanged to empirical p.m.f.s with empty cells; evaluated at
// EmpiricalPmf::to_zpmf() they are the plug-in estimators.

namespace jointinfo {

/// Shannon entropy -sum p log p of a probability vector.
double entropy(std::span<const double> p);

/// Joint entropy H(X, Y) = -sum_k p_{Z,k} log p_{Z,k}.
double joint_entropy(const ZPmf &p);

/// sum_{i,j} p_{i,j} log(p_{i,j} / (p_{X,i} p_{Y,j})). Not clamped: rounding can
/// leave it a few ulps below zero.
double mutual_information(const ZPmf &p);

/// The two functionals the estimators and studies are built around.
enum class Measure { JointEntropy, MutualInformation };

/// "entropy" or "mi".
std::string_view to_string(Measure measure) noexcept;
/// Accepts "entropy" / "mi". Throws std::invalid_argument otherwise.
Measure parse_measure(std::string_view name);

/// joint_entropy or mutual_information, by tag.
double evaluate(Measure measure, const ZPmf &p);

/// sum p log(p/q). Throws std::invalid_argument when q_k = 0 < p_k or lengths differ.
double kl_divergence(std::span<const double> p, std::span<const double> q);

} // namespace jointinfo

#endif // JOINTINFO_MEASURES_HPP_
