#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "irsdec/bounds.hpp"
#include "irsdec/decoder.hpp"
#include "irsdec/irs.hpp"
#include "irsdec/pgz.hpp"
#include "irsdec/rs.hpp"
#include "irsdec/selftest.hpp"
#include "irsdec/sim.hpp"

namespace py = pybind11;
using namespace irsdec;

namespace {

using Rows = std::vector<std::vector<int>>;

Matrix to_matrix(const Rows& rows) {
    Matrix m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
    for (int r = 0; r < m.rows; ++r) {
        if (static_cast<int>(rows[r].size()) != m.cols)
            throw std::invalid_argument("ragged matrix");
        for (int c = 0; c < m.cols; ++c) {
            int v = rows[r][c];
            if (v < 0 || v > 0xFFFF) throw std::invalid_argument("symbol out of range");
            m.at(r, c) = static_cast<uint16_t>(v);
        }
    }
    return m;
}

Rows from_matrix(const Matrix& m) {
    Rows rows(m.rows, std::vector<int>(m.cols));
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c) rows[r][c] = m.at(r, c);
    return rows;
}

Variant parse_variant(const std::string& v) {
    if (v == "extended") return Variant::Extended;
    if (v == "cyclic") return Variant::Cyclic;
    if (v == "shortened") return Variant::Shortened;
    throw std::invalid_argument("variant must be extended|cyclic|shortened");
}

py::dict result_dict(const DecodeResult& res) {
    py::dict d;
    d["ok"] = res.ok;
    if (res.ok) {
        d["codeword"] = from_matrix(res.codeword);
        d["support"] = res.support;
        d["error_rows"] = from_matrix(res.error_rows);
        d["f_hat"] = res.f_hat;
    } else {
        d["reason"] = std::string(fail_reason_name(res.reason));
    }
    return d;
}

ErrorModel parse_model(const std::string& mode, int f, double p, bool force_independent) {
    if (mode == "fixed") return ErrorModel::fixed(f, force_independent);
    if (mode == "bernoulli") return ErrorModel::bernoulli(p);
    if (mode == "dependent") return ErrorModel::dependent(f);
    throw std::invalid_argument("mode must be fixed|bernoulli|dependent");
}

DecoderKind parse_decoder(const std::string& d) {
    if (d == "collab") return DecoderKind::Collaborative;
    if (d == "incremental") return DecoderKind::Incremental;
    if (d == "indep") return DecoderKind::IndependentColumns;
    throw std::invalid_argument("decoder must be collab|incremental|indep");
}

py::dict stats_dict(const SimStats& st) {
    py::dict d;
    d["trials"] = st.trials;
    d["successes"] = st.successes;
    d["miscorrections"] = st.miscorrections;
    py::dict failures;
    for (int r = 0; r < 4; ++r)
        failures[fail_reason_name(static_cast<FailReason>(r))] = st.detected_failures[r];
    d["detected_failures"] = failures;
    d["failure_rate"] = st.failure_rate();
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Interleaved Reed-Solomon codec: joint row-error decoding via one "
              "elimination on the syndrome matrix, analytical failure bounds and a "
              "seeded Monte-Carlo harness.";

    py::class_<Field>(m, "Field")
        .def(py::init<int, uint32_t>(), py::arg("bits"), py::arg("primitive_poly"))
        .def(py::init<>())
        .def_property_readonly("bits", &Field::bits)
        .def_property_readonly("size", &Field::size)
        .def_property_readonly("poly", &Field::poly)
        .def("add", &Field::add)
        .def("mul", &Field::mul)
        .def("inv", &Field::inv)
        .def("div", &Field::div)
        .def("pow", &Field::pow)
        .def("exp", &Field::exp)
        .def("log", &Field::log);

    m.def("default_primitive_poly", &default_primitive_poly, py::arg("bits"));

    py::class_<RsSpec>(m, "RsSpec")
        .def_property_readonly("n", [](const RsSpec& s) { return s.n; })
        .def_property_readonly("k", [](const RsSpec& s) { return s.k; })
        .def_property_readonly("m", [](const RsSpec& s) { return s.m; })
        .def_property_readonly("q", &RsSpec::q)
        .def_property_readonly("t_half", [](const RsSpec& s) { return s.t_half; })
        .def_property_readonly("shortened", [](const RsSpec& s) { return s.s; })
        .def_property_readonly("variant",
                               [](const RsSpec& s) {
                                   switch (s.variant) {
                                       case Variant::Extended: return "extended";
                                       case Variant::Cyclic: return "cyclic";
                                       default: return "shortened";
                                   }
                               })
        .def("f_max", &RsSpec::f_max, py::arg("l"));

    m.def(
        "make_spec",
        [](int field_bits, int k, const std::string& variant, int s,
           std::optional<uint32_t> poly) {
            uint32_t p = poly ? *poly : default_primitive_poly(field_bits);
            return make_spec(Field(field_bits, p), k, parse_variant(variant), s);
        },
        py::arg("field_bits") = 8, py::arg("k") = 188, py::arg("variant") = "shortened",
        py::arg("s") = 51, py::arg("poly") = std::nullopt);

    m.def(
        "encode",
        [](const RsSpec& spec, const Rows& info) {
            return from_matrix(encode_irs(spec, to_matrix(info)));
        },
        py::arg("spec"), py::arg("info"));

    m.def(
        "decode",
        [](const RsSpec& spec, const Rows& received) {
            return result_dict(decode(spec, to_matrix(received)));
        },
        py::arg("spec"), py::arg("received"));

    m.def(
        "decode_incremental",
        [](const RsSpec& spec, const Rows& received, int check_cols) {
            return result_dict(decode_incremental(spec, to_matrix(received), check_cols));
        },
        py::arg("spec"), py::arg("received"), py::arg("check_cols") = 2);

    m.def(
        "decode_independent",
        [](const RsSpec& spec, const Rows& received) {
            return result_dict(decode_independent(spec, to_matrix(received)));
        },
        py::arg("spec"), py::arg("received"));

    m.def("p_dependent_bound", &p_dependent_bound, py::arg("f"), py::arg("l"), py::arg("q"));
    m.def("p_failure_bound", &p_failure_bound, py::arg("f"), py::arg("l"), py::arg("q"),
          py::arg("f_max"));
    m.def("p_valid_fraction", &p_valid_fraction, py::arg("t"), py::arg("q"));
    m.def("p_error_bound", &p_error_bound, py::arg("f"), py::arg("l"), py::arg("q"),
          py::arg("f_max"));
    m.def("p_error_bound_factorial", &p_error_bound_factorial, py::arg("f"), py::arg("l"),
          py::arg("q"), py::arg("f_max"));
    m.def("p_error_bound_approx", &p_error_bound_approx, py::arg("f"), py::arg("l"),
          py::arg("q"));

    auto make_bounds_input = [](double q, int l, int f_max, int n_rows, double p_i) {
        BoundsInput bi;
        bi.q = q;
        bi.l = l;
        bi.f_max = f_max;
        bi.n_rows = n_rows;
        bi.p_i = p_i;
        return bi;
    };
    m.def(
        "fer_bound",
        [make_bounds_input](double p_i, int n_rows, int l, double q, int f_max) {
            return fer_bound(make_bounds_input(q, l, f_max, n_rows, p_i));
        },
        py::arg("p_i"), py::arg("n_rows") = 204, py::arg("l") = 16, py::arg("q") = 256.0,
        py::arg("f_max") = 15);
    m.def(
        "fer_error_bound",
        [make_bounds_input](double p_i, int n_rows, int l, double q, int f_max) {
            return fer_error_bound(make_bounds_input(q, l, f_max, n_rows, p_i));
        },
        py::arg("p_i"), py::arg("n_rows") = 204, py::arg("l") = 16, py::arg("q") = 256.0,
        py::arg("f_max") = 15);

    m.def(
        "simulate",
        [](const RsSpec& spec, int l, const std::string& mode, int f, double p,
           bool force_independent, uint64_t trials, uint64_t seed, const std::string& decoder,
           int check_cols, int workers) {
            SimConfig cfg;
            cfg.spec = spec;
            cfg.l = l;
            cfg.model = parse_model(mode, f, p, force_independent);
            cfg.trials = trials;
            cfg.master_seed = seed;
            cfg.decoder = parse_decoder(decoder);
            cfg.check_cols = check_cols;
            cfg.workers = workers;
            py::gil_scoped_release release;
            return run(cfg);
        },
        py::arg("spec"), py::arg("l"), py::arg("mode") = "bernoulli", py::arg("f") = 0,
        py::arg("p") = 0.0, py::arg("force_independent") = false, py::arg("trials") = 1000,
        py::arg("seed") = 0, py::arg("decoder") = "collab", py::arg("check_cols") = 2,
        py::arg("workers") = 1);

    m.def("_stats_dict", &stats_dict);
    py::class_<SimStats>(m, "SimStats")
        .def_property_readonly("trials", [](const SimStats& s) { return s.trials; })
        .def_property_readonly("successes", [](const SimStats& s) { return s.successes; })
        .def_property_readonly("miscorrections",
                               [](const SimStats& s) { return s.miscorrections; })
        .def_property_readonly("failure_rate", &SimStats::failure_rate)
        .def("as_dict", [](const SimStats& s) { return stats_dict(s); });

    m.def(
        "sweep",
        [](const RsSpec& spec, int l, const std::vector<double>& p_grid, uint64_t trials,
           uint64_t seed, int workers) {
            SimConfig cfg;
            cfg.spec = spec;
            cfg.l = l;
            cfg.model = ErrorModel::bernoulli(0.0);
            cfg.trials = trials;
            cfg.master_seed = seed;
            cfg.workers = workers;
            std::vector<SweepRow> rows;
            {
                py::gil_scoped_release release;
                rows = sweep(cfg, p_grid);
            }
            py::list out;
            for (const auto& r : rows) {
                py::dict d;
                d["p_i"] = r.p_i;
                d["fer_sim"] = r.fer_sim;
                d["fer_ci_lo"] = r.ci_lo;
                d["fer_ci_hi"] = r.ci_hi;
                d["fer_bound"] = r.fer_bound;
                d["fer_err_bound"] = r.fer_error_bound;
                d["trials"] = r.trials;
                out.append(d);
            }
            return out;
        },
        py::arg("spec"), py::arg("l"), py::arg("p_grid"), py::arg("trials") = 1000,
        py::arg("seed") = 0, py::arg("workers") = 1);

    m.def("selftest", [] {
        py::list out;
        for (const auto& r : run_selftest()) {
            py::dict d;
            d["name"] = r.name;
            d["passed"] = r.passed;
            out.append(d);
        }
        return out;
    });

#ifdef VERSION_INFO
#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)
    m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
    m.attr("__version__") = "dev";
#endif
}
