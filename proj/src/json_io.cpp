#include "chroma/json_io.hpp"

#include <algorithm>

namespace chroma {

using nlohmann::json;

json matrix_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(m(i, j).str());
    rows.push_back(std::move(row));
  }
  return json{{"dim", m.dim()}, {"rows", std::move(rows)}};
}

json rep_json(const RotationRep& r) {
  json out{{"k", r.k},
           {"dim", r.dim},
           {"kind", to_string(r.kind)},
           {"matrix", matrix_json(r.matrix)}};
  if (r.k == 1 || r.k == 2 || r.k == 3 || r.k == 4 || r.k == 6)
    out["two_d"] = matrix_json(rep_2d(r.k).matrix);
  return out;
}

json restriction_json(const RestrictionResult& res) {
  json out{{"k", res.k}, {"dim", res.dim}};
  if (res.n_max) {
    out["n_max"] = res.n_max->convert_to<std::uint64_t>();
    json moduli = json::array();
    for (const Int& d : res.valid_moduli)
      moduli.push_back(d.convert_to<std::uint64_t>());
    out["valid_moduli"] = std::move(moduli);
  } else {
    out["n_max"] = "unbounded";
    out["valid_moduli"] = json::array();
  }
  return out;
}

json table_json(const std::vector<TableRow>& rows) {
  json out = json::array();
  for (const TableRow& row : rows) {
    json r{{"k", row.k}, {"totient", row.totient}};
    if (row.n_max)
      r["n_max"] = *row.n_max;
    else
      r["n_max"] = "unbounded";
    out.push_back(std::move(r));
  }
  return out;
}

json counterexample_json(const Counterexample& ce) {
  return json{{"point", ce.point},
              {"t", ce.t},
              {"colour_base", ce.colour_base},
              {"colour_image", ce.colour_image}};
}

json agreement_json(const std::vector<AgreementRow>& rows) {
  json arr = json::array();
  bool all_agree = true;
  for (const AgreementRow& row : rows) {
    json r{{"k", row.k},           {"dim", row.dim},
           {"skipped", row.skipped}, {"unbounded", row.unbounded},
           {"symbolic", row.symbolic}, {"bruteforce", row.bruteforce},
           {"agree", row.agree}};
    if (row.first_violation)
      r["first_violation"] = counterexample_json(*row.first_violation);
    if (!row.skipped && !row.agree) all_agree = false;
    arr.push_back(std::move(r));
  }
  return json{{"rows", std::move(arr)}, {"all_agree", all_agree}};
}

json mindim_json(std::uint64_t n) {
  const auto [k, dim] = min_dimension(n);
  return json{{"n", n}, {"k", k}, {"dim", dim}};
}

}  // namespace chroma
