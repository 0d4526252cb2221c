#include <optional>
#include <string>
#include <vector>

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hgm/errors.hpp"
#include "hgm/kernels.hpp"
#include "hgm/report.hpp"
#include "hgm/runner.hpp"
#include "hgm/spectral.hpp"
#include "hgm/suites.hpp"

namespace py = pybind11;
using namespace hgm;

namespace {

// numpy arrays come in as DenseMatrix; validation happens in the constructor.
NonNegativeMatrix to_nn(const DenseMatrix& d) { return NonNegativeMatrix(d); }

std::vector<NonNegativeMatrix> to_nn(const std::vector<DenseMatrix>& ds) {
    std::vector<NonNegativeMatrix> out;
    out.reserve(ds.size());
    for (const auto& d : ds) out.emplace_back(d);
    return out;
}

NormKind parse_norm(const std::string& s) {
    if (s == "l1") return NormKind::L1;
    if (s == "l2") return NormKind::L2;
    if (s == "linf") return NormKind::LInf;
    throw ConfigError("unknown norm '" + s + "' (expected l1, l2 or linf)");
}

WeightVector make_weights(const std::vector<double>& w) {
    double s = 0;
    for (double x : w) s += x;
    return WeightVector(w, std::abs(s - 1.0) <= WeightVector::kSumTolerance ? WeightConstraint::SumOne
                                                                           : WeightConstraint::SumAtLeastOne);
}

std::string check_json(const std::string& suite, const std::vector<DenseMatrix>& mats,
                       std::optional<double> alpha, std::optional<double> beta,
                       std::optional<std::vector<double>> weights, double rel, double abs) {
    const auto& info = find_suite(suite);
    const auto ops = to_nn(mats);
    SuiteParams p;
    p.alpha = alpha;
    p.beta = beta;
    if (weights) p.weights = make_weights(*weights);
    else if (info.weights != WeightNeed::None) p.weights = WeightVector::uniform(ops.size());
    SuiteRun run{std::string(info.name), {info.evaluate(ops, p, Tolerance{rel, abs})}};
    return to_json(run);
}

std::string verify_json(const std::string& suite, std::size_t trials, std::uint64_t seed, std::size_t threads) {
    SweepConfig c;
    c.trials = trials;
    c.seed = seed;
    c.threads = threads;
    py::gil_scoped_release release;
    if (suite == "all") return to_json(run_all(c));
    return to_json(run_suite(suite, c));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Hadamard weighted geometric means of nonnegative matrices";

    static py::exception<ConvergenceError> convergence(m, "ConvergenceError", PyExc_RuntimeError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const ConvergenceError& e) {
            py::set_error(convergence, e.what());
        } catch (const ParseError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    m.def("hadamard_product", [](const DenseMatrix& a, const DenseMatrix& b) {
        return hadamard_product(to_nn(a), to_nn(b)).dense();
    });
    m.def("hadamard_power", [](const DenseMatrix& a, double alpha) { return hadamard_power(to_nn(a), alpha).dense(); },
          py::arg("a"), py::arg("alpha"));
    m.def("hadamard_mean", [](const std::vector<DenseMatrix>& mats, const std::vector<double>& exps) {
        return hadamard_mean(to_nn(mats), exps).dense();
    });
    m.def("weighted_geometric_mean", [](const std::vector<DenseMatrix>& mats, const std::vector<double>& w) {
        return weighted_geometric_mean(to_nn(mats), make_weights(w)).dense();
    });
    m.def("cyclic_factor_B", [](const std::vector<DenseMatrix>& mats, const std::vector<double>& w, std::size_t i) {
        return cyclic_factor_B(to_nn(mats), make_weights(w), i).dense();
    }, "0-based index");
    m.def("cyclic_product_P", [](const std::vector<DenseMatrix>& mats, std::size_t j) {
        return cyclic_product_P(to_nn(mats), j).dense();
    }, "0-based index");

    m.def("spectral_radius", [](const DenseMatrix& a) { return rho(to_nn(a)); });
    m.def("spectral_radius_oracle", [](const DenseMatrix& a) { return spectral_radius_oracle(to_nn(a)); },
          "exact-polynomial check, n <= 5");
    m.def("operator_norm", [](const DenseMatrix& a, const std::string& kind) {
        return operator_norm(to_nn(a), parse_norm(kind));
    }, py::arg("a"), py::arg("kind") = "l2");
    m.def("numerical_radius", [](const DenseMatrix& a) { return numerical_radius(to_nn(a)); });

    m.def("kernel_matrix", [](const std::string& spec, std::size_t n) {
        return discretize(KernelSpec::parse(spec, n)).dense();
    }, py::arg("spec"), py::arg("n") = 16);

    m.def("counterexample", [](double alpha) {
        const auto r = run_counterexample(alpha);
        return py::make_tuple(r.at("||A^(a) o B^(a) o A^(a)||"), r.at("||ABA||^a"));
    }, py::arg("alpha") = 1.0 / 3.0, "returns (||A^(a) o B^(a) o A^(a)||, ||ABA||^a)");

    m.def("suite_names", [] {
        std::vector<std::string> names;
        for (const auto& s : suite_registry()) names.emplace_back(s.name);
        return names;
    });
    m.def("check_json", &check_json);
    m.def("verify_json", &verify_json);
}
