#include "shnn/core.hpp"

#include "shnn/hamiltonians.hpp"

namespace shnn {

PhasePoint::PhasePoint(Vec q_, Vec p_) : q(std::move(q_)), p(std::move(p_)) {
    if (q.size() != p.size() || q.size() < 1)
        throw DimensionError("PhasePoint: q and p must have equal positive length");
    if (!q.allFinite() || !p.allFinite()) throw NumericError("PhasePoint: non-finite entries");
}

Vec PhasePoint::flat() const {
    Vec x(2 * q.size());
    x << q, p;
    return x;
}

PhasePoint PhasePoint::from_flat(const Vec& x) {
    if (x.size() % 2 != 0 || x.size() == 0)
        throw DimensionError("PhasePoint::from_flat: length must be even and positive");
    const Eigen::Index d = x.size() / 2;
    return PhasePoint(x.head(d), x.tail(d));
}

DomainBox::DomainBox(Vec lower_, Vec upper_) : lower(std::move(lower_)), upper(std::move(upper_)) {
    if (lower.size() != upper.size() || lower.size() == 0 || lower.size() % 2 != 0)
        throw DimensionError("DomainBox: bounds must share an even positive length");
    for (Eigen::Index i = 0; i < lower.size(); ++i)
        if (!(lower[i] < upper[i])) throw DimensionError("DomainBox: lower must be < upper");
}

void Dataset::validate() const {
    if (points.rows() < 1) throw DimensionError("Dataset: needs at least one point");
    if (derivatives.rows() != points.rows() || derivatives.cols() != points.cols())
        throw DimensionError("Dataset: derivative shape mismatch");
    if (h_values.size() != points.rows()) throw DimensionError("Dataset: h_values size mismatch");
    if (anchor_point.size() != points.cols())
        throw DimensionError("Dataset: anchor dimension mismatch");
    if (points.cols() % 2 != 0) throw DimensionError("Dataset: phase dimension must be even");
}

Vec jinv_apply(const Vec& v) {
    if (v.size() % 2 != 0 || v.size() == 0)
        throw DimensionError("jinv_apply: vector length must be even and positive");
    const Eigen::Index d = v.size() / 2;
    Vec out(v.size());
    out.head(d) = -v.tail(d);
    out.tail(d) = v.head(d);
    return out;
}

Mat jinv_apply_rows(const Mat& v) {
    if (v.cols() % 2 != 0 || v.cols() == 0)
        throw DimensionError("jinv_apply_rows: row length must be even and positive");
    const Eigen::Index d = v.cols() / 2;
    Mat out(v.rows(), v.cols());
    out.leftCols(d) = -v.rightCols(d);
    out.rightCols(d) = v.leftCols(d);
    return out;
}

Mat sample_domain(const DomainBox& box, Eigen::Index n, Rng& rng) {
    if (n < 1) throw DimensionError("sample_domain: n must be >= 1");
    const Eigen::Index dim = box.dim();
    Mat points(n, dim);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < dim; ++j)
            points(i, j) = rng.uniform(box.lower[j], box.upper[j]);
    return points;
}

Dataset make_dataset(const SystemSpec& system, const DomainBox& box, Eigen::Index n, Rng& rng) {
    if (box.dim() != system.dim())
        throw DimensionError("make_dataset: box dimension does not match system");
    Dataset ds;
    ds.points = sample_domain(box, n, rng);
    ds.derivatives.resize(n, box.dim());
    ds.h_values.resize(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const Vec x = ds.points.row(i);
        ds.derivatives.row(i) = vector_field(system, x);
        ds.h_values[i] = eval_H(system, x);
    }
    ds.anchor_point = ds.points.row(0);
    ds.anchor_value = ds.h_values[0];
    ds.validate();
    return ds;
}

}  // namespace shnn
