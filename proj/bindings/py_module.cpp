// Python bindings for the core operations.
#include <pybind11/eigen.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hyprec/curvature.hpp"
#include "hyprec/geometry.hpp"
#include "hyprec/recdata.hpp"

namespace py = pybind11;
using namespace hyprec;

namespace {

geometry::BallPoint bp(const Eigen::VectorXd& x, double c) {
    return geometry::BallPoint{x, geometry::Curvature(c)};
}

curvature::DeltaEstimate estimate_c_csr(
    const py::array_t<std::int64_t, py::array::c_style | py::array::forcecast>& indptr,
    const py::array_t<std::int64_t, py::array::c_style | py::array::forcecast>& indices,
    std::int64_t n_rows, std::int64_t n_cols, int rank, std::int64_t sample_size, int trials,
    std::uint64_t seed, const std::string& normalization) {
    if (indptr.ndim() != 1 || indices.ndim() != 1)
        throw std::invalid_argument("estimate_c_csr: indptr/indices must be 1-d");
    if (indptr.shape(0) != n_rows + 1)
        throw std::invalid_argument("estimate_c_csr: indptr size must be n_rows + 1");
    curvature::LinearOp op =
        curvature::csr_op(indptr.data(), indices.data(), n_rows, n_cols);
    return curvature::estimate_c(op, rank, sample_size, trials, seed, normalization);
}

}  // namespace

PYBIND11_MODULE(_hyprec, m) {
    m.doc() = "hyperbolic geometry kernels and curvature estimation";

    m.def(
        "mobius_add",
        [](const Eigen::VectorXd& x, const Eigen::VectorXd& y, double c) {
            return geometry::mobius_add(bp(x, c), bp(y, c)).x;
        },
        py::arg("x"), py::arg("y"), py::arg("c"));
    m.def(
        "poincare_distance",
        [](const Eigen::VectorXd& x, const Eigen::VectorXd& y, double c) {
            return geometry::poincare_distance(bp(x, c), bp(y, c));
        },
        py::arg("x"), py::arg("y"), py::arg("c"));
    m.def(
        "conformal_factor",
        [](const Eigen::VectorXd& x, double c) { return geometry::conformal_factor(bp(x, c)); },
        py::arg("x"), py::arg("c"));
    m.def(
        "expmap0",
        [](const Eigen::VectorXd& v, double c) {
            return geometry::ball_expmap0(v, geometry::Curvature(c)).x;
        },
        py::arg("v"), py::arg("c"));
    m.def(
        "logmap0",
        [](const Eigen::VectorXd& y, double c) { return geometry::ball_logmap0(bp(y, c)); },
        py::arg("y"), py::arg("c"));
    m.def(
        "project_to_ball",
        [](const Eigen::VectorXd& x, double c) {
            return geometry::project_to_ball(x, geometry::Curvature(c)).x;
        },
        py::arg("x"), py::arg("c"));
    m.def(
        "ball_to_hyperboloid",
        [](const Eigen::VectorXd& p, double c) {
            return geometry::ball_to_hyperboloid(bp(p, c)).x;
        },
        py::arg("p"), py::arg("c"));
    m.def(
        "hyperboloid_to_ball",
        [](const Eigen::VectorXd& z, double c) {
            return geometry::hyperboloid_to_ball(
                       geometry::HyperboloidPoint{z, geometry::Curvature(c)})
                .x;
        },
        py::arg("z"), py::arg("c"));
    m.def(
        "lorentz_distance",
        [](const Eigen::VectorXd& x, const Eigen::VectorXd& y, double c) {
            geometry::Curvature k(c);
            return geometry::lorentz_distance(geometry::HyperboloidPoint{x, k},
                                              geometry::HyperboloidPoint{y, k});
        },
        py::arg("x"), py::arg("y"), py::arg("c"));

    m.def(
        "delta_hyperbolicity",
        [](const curvature::Mat& dist, int base) {
            return curvature::delta_hyperbolicity(dist, base);
        },
        py::arg("dist"), py::arg("base") = 0,
        "Gromov delta of a metric space given its distance matrix");
    m.def(
        "truncated_svd",
        [](const curvature::Mat& a, int rank, std::uint64_t seed) {
            curvature::LinearOp op = curvature::dense_op(&a);
            curvature::SvdResult r = curvature::truncated_svd(op, rank, seed);
            return py::make_tuple(r.u, r.s, r.v);
        },
        py::arg("a"), py::arg("rank"), py::arg("seed") = 0,
        "Seeded randomized truncated SVD; returns (U, s, V)");

    py::class_<curvature::DeltaEstimate>(m, "DeltaEstimate")
        .def_readonly("delta_raw", &curvature::DeltaEstimate::delta_raw)
        .def_readonly("delta_rel", &curvature::DeltaEstimate::delta_rel)
        .def_readonly("c", &curvature::DeltaEstimate::c)
        .def_readonly("delta_trials", &curvature::DeltaEstimate::delta_trials)
        .def_readonly("diam_trials", &curvature::DeltaEstimate::diam_trials)
        .def_readonly("normalization", &curvature::DeltaEstimate::normalization)
        .def("to_dict", [](const curvature::DeltaEstimate& e) {
            return py::module_::import("json").attr("loads")(e.to_json().dump());
        });
    m.def("estimate_c_csr", &estimate_c_csr, py::arg("indptr"), py::arg("indices"),
          py::arg("n_rows"), py::arg("n_cols"), py::arg("rank") = 100,
          py::arg("sample_size") = 1500, py::arg("trials") = 10, py::arg("seed") = 0,
          py::arg("normalization") = "raw",
          "Estimate delta-hyperbolicity and curvature c from a binary CSR matrix");
    m.def(
        "estimate_c_dense",
        [](const curvature::Mat& a, int rank, std::int64_t sample_size, int trials,
           std::uint64_t seed, const std::string& normalization) {
            curvature::LinearOp op = curvature::dense_op(&a);
            return curvature::estimate_c(op, rank, sample_size, trials, seed, normalization);
        },
        py::arg("a"), py::arg("rank") = 100, py::arg("sample_size") = 1500,
        py::arg("trials") = 10, py::arg("seed") = 0, py::arg("normalization") = "raw");

    m.def(
        "load_interactions",
        [](const std::string& path, const std::string& format, double min_rating,
           std::int64_t min_user_items) {
            recdata::InteractionMatrix mat =
                recdata::load_interactions(path, format, min_rating, min_user_items);
            py::array_t<std::int64_t> indptr(static_cast<py::ssize_t>(mat.indptr.size()));
            py::array_t<std::int64_t> indices(static_cast<py::ssize_t>(mat.indices.size()));
            std::copy(mat.indptr.begin(), mat.indptr.end(), indptr.mutable_data());
            std::copy(mat.indices.begin(), mat.indices.end(), indices.mutable_data());
            return py::make_tuple(indptr, indices, mat.n_users, mat.n_items);
        },
        py::arg("path"), py::arg("format") = "movielens-dat", py::arg("min_rating") = 0.0,
        py::arg("min_user_items") = 0,
        "Load an interactions file; returns (indptr, indices, n_users, n_items)");
}
