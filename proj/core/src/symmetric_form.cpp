#include "polyalg/symmetric_form.hpp"

#include <algorithm>
#include <cmath>

#include "polyalg/exceptions.hpp"

namespace polyalg {

std::uint64_t encode_multiset(std::span<const int> sorted_indices) {
    if (sorted_indices.size() > 8) throw std::invalid_argument("multiset keys support degree <= 8");
    std::uint64_t key = 0;
    for (std::size_t k = 0; k < sorted_indices.size(); ++k) {
        if (sorted_indices[k] < 0 || sorted_indices[k] > 255)
            throw std::invalid_argument("multiset index out of range");
        key |= static_cast<std::uint64_t>(sorted_indices[k]) << (8 * k);
    }
    return key;
}

std::vector<int> decode_multiset(std::uint64_t key, int degree) {
    std::vector<int> idx(degree);
    for (int k = 0; k < degree; ++k) idx[k] = static_cast<int>((key >> (8 * k)) & 0xff);
    return idx;
}

std::vector<std::vector<int>> enumerate_multisets(int dim, int length) {
    std::vector<std::vector<int>> out;
    if (length == 0) {
        out.push_back({});
        return out;
    }
    std::vector<int> current(length, 0);
    while (true) {
        out.push_back(current);
        int pos = length - 1;
        while (pos >= 0 && current[pos] == dim - 1) --pos;
        if (pos < 0) break;
        const int next = current[pos] + 1;
        for (int k = pos; k < length; ++k) current[k] = next;
    }
    return out;
}

double multiset_orderings(std::span<const int> sorted_indices) {
    const int n = static_cast<int>(sorted_indices.size());
    double denom = 1.0;
    int run = 1;
    for (int k = 1; k < n; ++k) {
        if (sorted_indices[k] == sorted_indices[k - 1]) {
            ++run;
        } else {
            denom *= factorial(run);
            run = 1;
        }
    }
    denom *= factorial(run);
    return factorial(n) / denom;
}

SymmetricForm::SymmetricForm(int degree, SpacePtr source, AlgebraPtr target)
    : degree_(degree), source_(std::move(source)), target_(std::move(target)) {
    if (degree < 0) throw std::invalid_argument("form degree must be >= 0");
}

void SymmetricForm::set_coeff(std::span<const int> sorted_indices, CVec value) {
    if (static_cast<int>(sorted_indices.size()) != degree_)
        throw DimensionMismatch("coefficient index arity does not match degree");
    const std::uint64_t key = encode_multiset(sorted_indices);
    auto it = std::lower_bound(coeffs_.begin(), coeffs_.end(), key,
                               [](const auto& entry, std::uint64_t k) { return entry.first < k; });
    if (it != coeffs_.end() && it->first == key) {
        it->second = std::move(value);
    } else {
        coeffs_.insert(it, {key, std::move(value)});
    }
}

const CVec& SymmetricForm::coeff(std::span<const int> sorted_indices) const {
    static const CVec zero_cache = CVec::Zero(0);
    const std::uint64_t key = encode_multiset(sorted_indices);
    auto it = std::lower_bound(coeffs_.begin(), coeffs_.end(), key,
                               [](const auto& entry, std::uint64_t k) { return entry.first < k; });
    if (it != coeffs_.end() && it->first == key) return it->second;
    return zero_cache;  // caller treats empty as zero
}

namespace {

CVec coeff_or_zero(const SymmetricForm& form, std::span<const int> sorted, int target_dim) {
    const CVec& c = form.coeff(sorted);
    return c.size() ? c : CVec(CVec::Zero(target_dim));
}

}  // namespace

CVec SymmetricForm::eval(std::span<const CVec> args) const {
    if (static_cast<int>(args.size()) != degree_) throw DimensionMismatch("wrong evaluation arity");
    const int d = source_->dim;
    const int n = degree_;
    const int td = target_->dim();
    if (n == 0) return coeffs_.empty() ? CVec(CVec::Zero(td)) : coeffs_[0].second;
    for (const CVec& a : args)
        if (a.size() != d) throw DimensionMismatch("argument dimension does not match source");

    CVec acc = CVec::Zero(td);
    std::vector<int> tuple(n, 0), sorted(n);
    while (true) {
        Cx factor(1, 0);
        for (int k = 0; k < n; ++k) factor *= args[k][tuple[k]];
        if (factor != Cx(0, 0)) {
            sorted = tuple;
            std::sort(sorted.begin(), sorted.end());
            const CVec& c = coeff(sorted);
            if (c.size()) acc += factor * c;
        }
        int pos = n - 1;
        while (pos >= 0 && tuple[pos] == d - 1) {
            tuple[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++tuple[pos];
    }
    return acc;
}

CVec SymmetricForm::eval_diag(const CVec& x) const {
    const int td = target_->dim();
    if (degree_ == 0) return coeffs_.empty() ? CVec(CVec::Zero(td)) : coeffs_[0].second;
    if (x.size() != source_->dim) throw DimensionMismatch("argument dimension does not match source");
    CVec acc = CVec::Zero(td);
    for (const auto& [key, c] : coeffs_) {
        const std::vector<int> idx = decode_multiset(key, degree_);
        Cx factor(multiset_orderings(idx), 0);
        for (int k : idx) factor *= x[k];
        acc += factor * c;
    }
    return acc;
}

CVec SymmetricForm::eval_mixed(const CVec& x, const CVec& y, int k) const {
    if (k < 0 || k > degree_) throw std::invalid_argument("eval_mixed requires 0 <= k <= n");
    SymmetricForm partial = *this;
    for (int j = 0; j < degree_ - k; ++j) partial = partial.contract(y);
    return partial.eval_diag(x);
}

SymmetricForm SymmetricForm::contract(const CVec& v) const {
    if (degree_ < 1) throw std::invalid_argument("cannot contract a degree-0 form");
    if (v.size() != source_->dim) throw DimensionMismatch("argument dimension does not match source");
    const int d = source_->dim;
    const int td = target_->dim();
    SymmetricForm out(degree_ - 1, source_, target_);
    for (const auto& mu : enumerate_multisets(d, degree_ - 1)) {
        CVec acc = CVec::Zero(td);
        std::vector<int> full(degree_);
        for (int l = 0; l < d; ++l) {
            if (v[l] == Cx(0, 0)) continue;
            std::copy(mu.begin(), mu.end(), full.begin());
            full[degree_ - 1] = l;
            std::sort(full.begin(), full.end());
            const CVec& c = coeff(full);
            if (c.size()) acc += v[l] * c;
        }
        if (acc.cwiseAbs().maxCoeff() != 0.0) out.set_coeff(mu, std::move(acc));
    }
    return out;
}

CVec eval_form(const SymmetricForm& form, std::span<const CVec> args) { return form.eval(args); }

SymmetricForm polarize(const PowerSumRep& rep) {
    const int n = rep.degree();
    if (n < 1) throw NoPolarization("degree-0 representations have no polarization");
    const int d = rep.source()->dim;
    SymmetricForm form(n, rep.source(), rep.target());
    const double scale = 1.0 / (std::pow(2.0, n) * factorial(n));
    for (const auto& mu : enumerate_multisets(d, n)) {
        CVec acc = CVec::Zero(rep.target()->dim());
        for (unsigned bits = 0; bits < (1u << n); ++bits) {
            CVec arg = CVec::Zero(d);
            double sign = 1.0;
            for (int j = 0; j < n; ++j) {
                const double eps = (bits >> j) & 1u ? -1.0 : 1.0;
                sign *= eps;
                arg[mu[j]] += eps;
            }
            acc += sign * rep.eval(arg);
        }
        acc *= scale;
        if (acc.cwiseAbs().maxCoeff() != 0.0) form.set_coeff(mu, std::move(acc));
    }
    return form;
}

std::vector<std::pair<double, CVec>> leibniz_expand(const SymmetricForm& form, const CVec& x,
                                                    const CVec& y) {
    const int n = form.degree();
    std::vector<std::pair<double, CVec>> out;
    out.reserve(n + 1);
    // k = 0..n; the k = 0 term is required for the correction-term identity.
    for (int k = 0; k <= n; ++k) out.emplace_back(binomial(n, k), form.eval_mixed(x, y, k));
    return out;
}

}  // namespace polyalg
