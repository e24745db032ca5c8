//
// zdchaos - Copyright 2026 The zdchaos Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "zdchaos/chaos.hpp"
#include "zdchaos/covering_file.hpp"
#include "zdchaos/dot.hpp"
#include "zdchaos/embed.hpp"

namespace py = pybind11;
using namespace zdchaos;

namespace {

// Arbitrary precision integers cross the boundary as Python ints.
py::int_ to_py(const BigInt &v) {
  return py::reinterpret_steal<py::int_>(
      PyLong_FromString(to_decimal(v).c_str(), nullptr, 10));
}

BigInt from_py(const py::int_ &v) { return from_decimal(py::str(v)); }

ScheduleMode parse_mode(const std::string &m) {
  if (m == "strict") return ScheduleMode::kStrict;
  if (m == "relaxed") return ScheduleMode::kRelaxed;
  throw py::value_error("mode must be 'strict' or 'relaxed'");
}

ImplicitTower make_tower(const std::string &gen, long l11, long l21) {
  ProviderPtr p = make_generator(gen);
  if (!p) throw py::value_error("unknown generator " + gen);
  return ImplicitTower(p, l11, l21);
}

py::dict report_dict(const WitnessReport &r) {
  py::dict w;
  for (const auto &x : r.witnesses) w[py::str(x.key)] = to_py(x.value);
  py::dict d;
  d["claim"] = r.claim;
  d["level"] = r.level;
  d["passed"] = r.pass;
  d["mode"] = to_string(r.mode);
  d["witnesses"] = w;
  d["notes"] = r.notes;
  d["text"] = r.to_text();
  return d;
}

}  // namespace

PYBIND11_MODULE(_zdchaos, m) {
  m.doc() = "Augmented graph coverings with a dense chaotic set";

  py::class_<ImplicitTower>(m, "Tower")
      .def(py::init(&make_tower), py::arg("generator") = "fixed-point",
           py::arg("l11") = 1, py::arg("l21") = 1)
      .def("l1", [](const ImplicitTower &t, std::size_t n) { return to_py(t.l1(n)); })
      .def("l2", [](const ImplicitTower &t, std::size_t n) { return to_py(t.l2(n)); })
      .def("cover_walk_length",
           [](const ImplicitTower &t, std::size_t n) { return to_py(t.cover_walk_length(n)); })
      .def("vertex_count",
           [](const ImplicitTower &t, std::size_t n) { return to_py(t.vertex_count(n)); })
      .def("q_interval",
           [](const ImplicitTower &t, std::size_t m, std::size_t n) {
             auto [lo, hi] = t.q_interval(m, n);
             return py::make_tuple(to_py(lo), to_py(hi));
           })
      .def("decode",
           [](const ImplicitTower &t, std::size_t level, const std::string &label,
              std::size_t target) {
             auto a = t.parse_label(level, label);
             if (!a) throw py::value_error("no vertex '" + label + "' at level " +
                                           std::to_string(level));
             return t.label(t.decode(*a, target));
           },
           py::arg("level"), py::arg("label"), py::arg("target"))
      .def("decode_p1",
           [](const ImplicitTower &t, std::size_t level, const py::int_ &pos,
              std::size_t target) {
             return t.label(decode_p1(t, level, from_py(pos), target));
           })
      .def("step",
           [](const ImplicitTower &t, std::size_t level, const std::string &label, int dir) {
             auto a = t.parse_label(level, label);
             if (!a) throw py::value_error("no vertex '" + label + "'");
             std::vector<std::string> out;
             for (const auto &b : t.step(*a, dir)) out.push_back(t.label(b));
             return out;
           },
           py::arg("level"), py::arg("label"), py::arg("direction") = 1)
      .def("schedule",
           [](const ImplicitTower &t, std::size_t k, const std::string &mode, std::size_t n0) {
             py::list out;
             for (const auto &e : schedule(t, n0, k, parse_mode(mode)))
               out.append(py::make_tuple(to_py(e.n), to_py(e.m), to_py(e.l1_n)));
             return out;
           },
           py::arg("k"), py::arg("mode") = "relaxed", py::arg("n0") = 1)
      .def("verify",
           [](const ImplicitTower &t, const std::string &claim, const std::string &mode,
              std::size_t m, std::size_t n, std::size_t k, std::size_t N,
              std::optional<std::size_t> res) {
             const ScheduleMode md = parse_mode(mode);
             const auto s = schedule(t, 1, k + 1, md);
             const std::size_t r = res.value_or(1);
             if (claim == "fixed-point-pattern") return report_dict(verify_fixed_point_pattern(t, m, n));
             if (claim == "property1") return report_dict(verify_property1(t, m, n, md));
             if (claim == "property2") return report_dict(verify_property2(t, m, n, md));
             if (claim == "triple-cover") return report_dict(verify_triple_cover(t, s, k, md));
             if (claim == "density") return report_dict(verify_density(t, s, k, md));
             if (claim == "proximal") return report_dict(proximality_witness(t, s, N, k, r, {}, md));
             if (claim == "recurrent") return report_dict(recurrence_witness(t, s, N, k, r, {}, md));
             if (claim == "invariant") return report_dict(verify_invariance(t, s, N, k, md));
             if (claim == "transitive") {
               const std::size_t mk = static_cast<std::size_t>(s[k - 1].m);
               const BigInt a = t.q_interval(mk, static_cast<std::size_t>(s[k - 1].n)).first;
               return report_dict(transitivity_witness(t, s, k, a, res.value_or(mk), md));
             }
             if (claim == "scrambled") {
               const CantorApprox c = cantor_approx(t, s, N, k + 1);
               return report_dict(scrambled_pair_witness(t, c.level, c.cylinders.at(0).first,
                                                         c.cylinders.at(1).first, r, 0, md));
             }
             throw py::value_error("unknown claim " + claim);
           },
           py::arg("claim"), py::arg("mode") = "relaxed", py::arg("m") = 2, py::arg("n") = 1,
           py::arg("k") = 1, py::arg("N") = 1, py::arg("res") = py::none())
      .def("replay", [](const ImplicitTower &t, const std::string &text) {
        return replay(t, WitnessReport::parse(text));
      });

  m.def("generators", [] { return std::vector<std::string>{"fixed-point", "odometer"}; });

  m.def(
      "build",
      [](const std::string &gen, std::size_t levels, std::size_t budget) {
        ProviderPtr p = make_generator(gen);
        if (!p) throw py::value_error("unknown generator " + gen);
        EmbeddingOptions opt;
        opt.vertex_budget = budget;
        opt.anchors = anchors_of(*p, levels);
        const Embedding e = build_embedding(materialize(*p, levels + 1), levels, opt);
        py::dict d;
        py::list sizes, dots;
        for (const auto &lv : e.levels) {
          sizes.append(lv.graph->num_vertices());
          dots.append(to_dot(lv));
        }
        d["vertices"] = sizes;
        d["dot"] = dots;
        d["report"] = report_dict(verify_construction(e));
        return d;
      },
      py::arg("generator"), py::arg("levels") = 3,
      py::arg("budget") = kDefaultVertexBudget);

  m.def("validate_covering_text", [](const std::string &text) {
    const CoveringFile f = parse_covering(text);
    const CoveringReport r = validate_covering(f.covering);
    py::dict d;
    d["ok"] = r.ok();
    d["chain_transitive"] = r.chain_transitive;
    d["bidirectional"] = r.bidirectional;
    d["depth"] = f.covering.depth();
    d["problems"] = r.problems;
    return d;
  });

  py::register_exception<BudgetExceeded>(m, "BudgetExceeded");
  py::register_exception<DepthExceeded>(m, "DepthExceeded");
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
}
