#include <sstream>

#include "hilbert_hodge/cli.hpp"

namespace hilbert_hodge::cli {

namespace {

std::string list(const std::vector<int>& values) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < values.size(); ++i) os << (i ? "," : "") << values[i];
  os << ')';
  return os.str();
}

std::string list(const std::vector<long>& values) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < values.size(); ++i) os << (i ? "," : "") << values[i];
  os << ')';
  return os.str();
}

std::string comma_list(const std::vector<int>& values) {
  std::ostringstream os;
  for (std::size_t i = 0; i < values.size(); ++i) os << (i ? "," : "") << values[i];
  return os.str();
}

std::string subset(const std::vector<int>& values) { return "{" + comma_list(values) + "}"; }

std::string latex_monomial(const LineBundleMonomial& monomial) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < monomial.exponents.size(); ++i) {
    const int e = monomial.exponents[i];
    if (e == 0) continue;
    os << (first ? "" : " ") << "\\mathcal{L}_{" << i + 1 << "}";
    if (e != 1) os << "^{" << e << "}";
    first = false;
  }
  if (first) os << "\\mathcal{O}";
  return os.str();
}

void render_checks_text(const CheckReport& checks, std::ostream& os) {
  os << "Checks: " << checks.count(CheckStatus::Pass) << " pass, "
     << checks.count(CheckStatus::Fail) << " fail, " << checks.count(CheckStatus::Skipped)
     << " skipped\n";
  // Long skip lists (e.g. every m at an inconsistent genus) stay in the JSON report.
  const bool list_skipped = checks.count(CheckStatus::Skipped) <= 8;
  for (const CheckEntry& e : checks.entries) {
    if (e.status == CheckStatus::Pass) continue;
    if (e.status == CheckStatus::Skipped && !list_skipped) continue;
    os << "  [" << to_string(e.status) << "] " << e.name << ' ' << e.parameters << ": " << e.lhs;
    if (!e.rhs.empty()) os << " vs " << e.rhs;
    os << '\n';
  }
}

std::string render_text(const Document& doc) {
  std::ostringstream os;
  if (doc.n > 0) os << "Local system V_m: n=" << doc.n << " m=" << list(doc.m) << '\n';
  if (doc.cusps) os << "Cusps h=" << doc.cusps->get_str() << '\n';
  if (doc.genus) os << "Genus g=" << doc.genus->get_str() << '\n';

  if (doc.mhs) {
    os << "\nH^k(X, V_m)  [MHS defined over " << (doc.mhs->field == MhsField::Rational ? "Q" : "R")
       << "]\n";
    for (const MhsDegree& d : doc.mhs->degrees) {
      os << "  k=" << d.k << "  dim " << d.total_dim.get_str();
      if (d.status == DegreeStatus::Vanishes) {
        os << "  (vanishes)\n";
        continue;
      }
      os << "  = IH " << d.ih_part.get_str() << " + Eis " << d.eis_part.get_str() << '\n';
      os << "       weights:";
      for (const WeightLevel& w : d.weight_levels)
        os << "  W" << w.weight << ": " << w.dim.get_str();
      os << "\n       hodge:  ";
      for (const auto& [pq, dim] : d.hodge_numbers) {
        os << "  h^{" << pq.first << ',' << pq.second << "}=" << dim.get_str();
      }
      os << '\n';
      for (const auto& [P, labels] : d.gr_F) {
        os << "       Gr_F^" << P << ":";
        for (std::size_t i = 0; i < labels.size(); ++i)
          os << (i ? " + " : " ") << to_string(labels[i]);
        os << '\n';
      }
    }
  }
  if (doc.ih) {
    os << "\nIH^k(X*, V_m)  [L2 sections D=" << doc.ih->l2_dim.get_str() << "]\n";
    for (std::size_t k = 0; k < doc.ih->dims.size(); ++k) {
      os << "  k=" << k << "  dim " << doc.ih->dims[k].get_str() << '\n';
    }
    for (const auto& [P, dim] : doc.ih->middle_hodge) {
      os << "  IH^{" << P << ',' << doc.ih->middle_weight - P << "}=" << dim.get_str() << '\n';
    }
  }
  if (doc.eisenstein) {
    os << "\nEisenstein cohomology\n";
    for (const EisensteinDatum& e : *doc.eisenstein) {
      os << "  k=" << e.k << "  dim " << e.dim.get_str() << "  (" << e.basis.size() << " per cusp, "
         << e.cusps.get_str() << " cusps)\n";
      for (const EisensteinBasisElement& b : e.basis) {
        os << "    a=" << subset(b.subset) << "  alpha=" << list(b.alpha)
           << "  beta=" << list(b.beta) << '\n';
      }
    }
  }
  if (doc.sheaves) {
    os << "\nCohomology sheaves C^{P,l}\n";
    for (const auto& [cell, multiset] : doc.sheaves->cells) {
      os << "  (P=" << cell.P << ", l=" << cell.l << "):";
      bool first = true;
      for (const auto& [monomial, count] : multiset) {
        os << (first ? " " : " + ") << to_string(monomial);
        if (count != 1) os << " x" << count;
        first = false;
      }
      os << '\n';
    }
  }
  os << '\n';
  render_checks_text(doc.checks, os);
  return os.str();
}

std::string render_latex(const Document& doc) {
  std::ostringstream os;
  os << "% n=" << doc.n << " m=" << list(doc.m) << '\n';
  if (doc.mhs) {
    os << "\\begin{tabular}{r r l}\n"
       << "$k$ & $\\dim H^k$ & Hodge numbers $h^{P,Q}_k$ \\\\\n\\hline\n";
    for (const MhsDegree& d : doc.mhs->degrees) {
      os << d.k << " & " << d.total_dim.get_str() << " & ";
      bool first = true;
      for (const auto& [pq, dim] : d.hodge_numbers) {
        os << (first ? "" : ", ") << "$h^{" << pq.first << ',' << pq.second << "}=" << dim.get_str()
           << "$";
        first = false;
      }
      if (first) os << "--";
      os << " \\\\\n";
    }
    os << "\\end{tabular}\n";
  }
  if (doc.ih) {
    os << "\\begin{tabular}{r r}\n$(P,Q)$ & $\\dim IH^{P,Q}$ \\\\\n\\hline\n";
    for (const auto& [P, dim] : doc.ih->middle_hodge) {
      os << "$(" << P << ',' << doc.ih->middle_weight - P << ")$ & " << dim.get_str() << " \\\\\n";
    }
    os << "\\end{tabular}\n";
  }
  if (doc.eisenstein) {
    os << "\\begin{tabular}{r r l l l}\n"
       << "$k$ & $\\dim H^k_{\\mathrm{Eis}}$ & $a$ & $\\alpha$ & $\\beta$ \\\\\n\\hline\n";
    for (const EisensteinDatum& e : *doc.eisenstein) {
      if (e.basis.empty()) {
        os << e.k << " & " << e.dim.get_str() << " & -- & -- & -- \\\\\n";
      }
      for (const EisensteinBasisElement& b : e.basis) {
        os << e.k << " & " << e.dim.get_str() << " & $\\{" << comma_list(b.subset) << "\\}$ & $"
           << list(b.alpha) << "$ & $" << list(b.beta) << "$ \\\\\n";
      }
    }
    os << "\\end{tabular}\n";
  }
  if (doc.sheaves) {
    os << "\\begin{tabular}{r r l}\n$P$ & $l$ & $\\mathcal{C}^{P,l}$ \\\\\n\\hline\n";
    for (const auto& [cell, multiset] : doc.sheaves->cells) {
      os << cell.P << " & " << cell.l << " & $";
      bool first = true;
      for (const auto& [monomial, count] : multiset) {
        os << (first ? "" : " \\oplus ") << latex_monomial(monomial);
        if (count != 1) os << "^{\\oplus " << count << "}";
        first = false;
      }
      os << "$ \\\\\n";
    }
    os << "\\end{tabular}\n";
  }
  if (!doc.checks.entries.empty()) {
    os << "\\begin{tabular}{l r}\nChecks & count \\\\\n\\hline\n"
       << "pass & " << doc.checks.count(CheckStatus::Pass) << " \\\\\n"
       << "fail & " << doc.checks.count(CheckStatus::Fail) << " \\\\\n"
       << "skipped & " << doc.checks.count(CheckStatus::Skipped) << " \\\\\n"
       << "\\end{tabular}\n";
  }
  return os.str();
}

}  // namespace

std::string render(const Document& document, Format format) {
  switch (format) {
    case Format::Json:
      return dump(to_json(document));
    case Format::Text:
      return render_text(document);
    case Format::Latex:
      return render_latex(document);
  }
  return {};
}

}  // namespace hilbert_hodge::cli
