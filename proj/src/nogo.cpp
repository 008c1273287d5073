#include "qnogo/nogo.hpp"

#include <algorithm>
#include <cmath>

namespace qnogo {

namespace {

constexpr double kDichotomyTol = 1e-8;
constexpr double kRelationTol = 1e-8;
constexpr std::size_t kSearchCap = 1000000;

bool assignment_less(const ValueAssignment& a, const ValueAssignment& b) {
    for (std::size_t k = 0; k < a.entries.size() && k < b.entries.size(); ++k) {
        if (a.entries[k].second != b.entries[k].second)
            return a.entries[k].second < b.entries[k].second;
    }
    return a.entries.size() < b.entries.size();
}

}  // namespace

std::vector<double> projector_valuation_dichotomy(const ExpectationFunctional& e,
                                                  const std::vector<Projector>& projectors) {
    std::vector<double> classified;
    classified.reserve(projectors.size());
    for (const auto& p : projectors) {
        if (p.rank() != 1)
            throw Error("projector_valuation_dichotomy: projectors must be rank-1");
        const double value = e.evaluate(p.as_observable());
        if (std::abs(value * value - value) > kDichotomyTol)
            throw DichotomyViolation("projector valuation " + std::to_string(value) +
                                         " violates v^2 = v",
                                     p.matrix(), value);
        classified.push_back(value >= 0.5 ? 1.0 : 0.0);
    }
    return classified;
}

ExpectationFunctional constant_valuation(int dim, ConstantBranch branch) {
    const double constant = branch == ConstantBranch::zero ? 0.0 : 1.0;
    // The constant rank-1 valuation extended additively over spectra is
    // E(A) = c * Tr(A): every eigenvalue's rank-1 projector contributes c.
    return {dim,
            [constant](const Observable& o) { return constant * o.matrix().trace().real(); },
            branch == ConstantBranch::zero ? "constant-zero" : "constant-one"};
}

ContradictionReport vn_contradiction(int dim, ConstantBranch branch) {
    if (dim < 2) throw Error("vn_contradiction: dim must be >= 2");
    const double constant = branch == ConstantBranch::zero ? 0.0 : 1.0;

    // The rank-1 assembly under the constant valuation puts the constant on
    // the diagonal and zero off the diagonal, i.e. the implied operator is
    // 0 or the identity. (The full functional-driven assembly agrees; the
    // nogo tests cross-check it against reconstruct_density.)
    const Matrix implied = constant * Matrix::Identity(dim, dim);

    ContradictionReport report;
    report.branch = branch;
    report.dim = dim;
    report.implied_trace = implied.trace().real();
    report.required_trace = 1.0;
    report.conflict = std::abs(report.implied_trace - report.required_trace) > 1e-9;
    return report;
}

SpinTriple spin_triple() {
    Matrix sx(2, 2);
    sx << 0.0, 0.5, 0.5, 0.0;
    Matrix sy(2, 2);
    sy << 0.0, Complex(0.0, -0.5), Complex(0.0, 0.5), 0.0;
    const Matrix sb = (sx + sy) / std::sqrt(2.0);
    return {Observable(sx), Observable(sy), Observable(sb)};
}

std::vector<ViolationRecord> spin_additivity_counterexample() {
    const SpinTriple triple = spin_triple();

    // the whole argument rests on all three spectra being {-1/2, +1/2}
    for (const Observable* o : {&triple.sigma_x, &triple.sigma_y, &triple.sigma_b}) {
        const auto dec = spectral_decompose(*o);
        if (std::abs(dec.eigenvalues(0) + 0.5) > 1e-10 ||
            std::abs(dec.eigenvalues(1) - 0.5) > 1e-10)
            throw Error("spin_additivity_counterexample: spectrum is not {-1/2, +1/2}");
    }

    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    std::vector<ViolationRecord> records;
    for (double vx : {0.5, -0.5}) {
        for (double vy : {0.5, -0.5}) {
            for (double vb : {0.5, -0.5}) {
                ViolationRecord rec;
                rec.assignment.entries = {{"sigma_x", vx}, {"sigma_y", vy}, {"sigma_b", vb}};
                rec.lhs = vb;
                rec.rhs = (vx + vy) * inv_sqrt2;
                rec.gap = std::abs(rec.lhs - rec.rhs);
                records.push_back(std::move(rec));
            }
        }
    }
    std::sort(records.begin(), records.end(), [](const auto& a, const auto& b) {
        if (a.gap != b.gap) return a.gap < b.gap;
        return assignment_less(a.assignment, b.assignment);
    });
    return records;
}

JointSearchResult joint_assignment_search(const std::vector<Observable>& observables,
                                          const std::vector<double>& coefficients,
                                          const std::vector<std::string>& labels) {
    const std::size_t count = observables.size();
    if (count < 2 || count > 12)
        throw Error("joint_assignment_search: need between 2 and 12 observables");
    if (coefficients.size() != count - 1)
        throw Error("joint_assignment_search: need one coefficient per non-target observable");
    const int dim = observables.front().dim();
    for (const auto& o : observables)
        if (o.dim() != dim) throw DimensionMismatch("joint_assignment_search: dims differ");
    if (!labels.empty() && labels.size() != count)
        throw Error("joint_assignment_search: label count mismatch");

    Matrix combo = Matrix::Zero(dim, dim);
    for (std::size_t k = 0; k + 1 < count; ++k) combo += coefficients[k] * observables[k].matrix();
    if (max_abs(combo - observables.back().matrix()) > kRelationTol)
        throw RelationNotSatisfiedByOperators(
            "joint_assignment_search: sum_k c_k O_k does not equal the target operator");

    std::vector<std::vector<double>> spectra;
    std::size_t tuple_count = 1;
    for (const auto& o : observables) {
        std::vector<double> values;
        for (const auto& [value, members] : spectral_decompose(o).merged_eigenvalues())
            values.push_back(value);
        if (tuple_count > kSearchCap / values.size())
            throw SearchSpaceTooLarge("joint_assignment_search: spectrum product exceeds 10^6");
        tuple_count *= values.size();
        spectra.push_back(std::move(values));
    }

    auto label_of = [&](std::size_t k) {
        if (!labels.empty()) return labels[k];
        return k + 1 == count ? std::string("target") : "O" + std::to_string(k);
    };

    JointSearchResult result;
    std::vector<std::size_t> index(count, 0);
    for (std::size_t t = 0; t < tuple_count; ++t) {
        double rhs = 0.0;
        for (std::size_t k = 0; k + 1 < count; ++k) rhs += coefficients[k] * spectra[k][index[k]];
        const double lhs = spectra[count - 1][index[count - 1]];

        ValueAssignment assignment;
        for (std::size_t k = 0; k < count; ++k)
            assignment.entries.emplace_back(label_of(k), spectra[k][index[k]]);

        const double gap = std::abs(lhs - rhs);
        ++result.tuples_searched;
        if (gap <= kRelationTol) {
            result.satisfying = std::move(assignment);
            result.violations.clear();
            return result;
        }
        result.violations.push_back({std::move(assignment), lhs, rhs, gap});

        // odometer over eigenvalue indices, last observable fastest
        for (std::size_t k = count; k-- > 0;) {
            if (++index[k] < spectra[k].size()) break;
            index[k] = 0;
        }
    }

    std::sort(result.violations.begin(), result.violations.end(),
              [](const ViolationRecord& a, const ViolationRecord& b) {
                  if (a.gap != b.gap) return a.gap < b.gap;
                  return assignment_less(a.assignment, b.assignment);
              });
    return result;
}

}  // namespace qnogo
