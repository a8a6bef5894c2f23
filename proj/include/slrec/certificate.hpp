#pragma once

// Non-semilinearity certificates. Two shapes arise: strictly increasing
// row eventual-periods (contradicting the uniform period bound any
// semilinear set must satisfy), and unbounded gap growth of a dim-1
// projection (no eventually periodic set has unbounded gaps).

#include <stdexcept>
#include <string>
#include <vector>

#include "slrec/epset.hpp"
#include "slrec/numeric.hpp"

namespace slrec {

struct CertRow {
  long m = 0;
  EPSet1 row;
  std::string provenance;       // closed formula or window horizon
  bool formula_backed = false;  // proved vs empirical
};

struct NonSLCertificate {
  enum class Kind { row_periods, gap_growth };
  Kind kind = Kind::row_periods;
  bool proved = false;
  std::vector<CertRow> rows;      // row_periods
  std::vector<Int> gap_values;    // gap_growth: projection values with growing gaps
  std::string note;
};

inline NonSLCertificate nonsl_certificate(std::vector<CertRow> rows) {
  if (rows.size() < 2)
    throw std::domain_error("nonsl_certificate: need at least 2 rows");
  for (size_t i = 0; i < rows.size(); ++i) {
    long ep = rows[i].row.eventual_period();
    if (ep <= 0) throw std::domain_error("nonsl_certificate: rows must have positive eventual period");
    if (i > 0) {
      if (rows[i - 1].m >= rows[i].m)
        throw std::domain_error("nonsl_certificate: row indices must increase");
      if (rows[i - 1].row.eventual_period() >= ep)
        throw std::domain_error("nonsl_certificate: eventual periods must strictly increase");
    }
  }
  NonSLCertificate c;
  c.kind = NonSLCertificate::Kind::row_periods;
  c.proved = true;
  for (const CertRow& r : rows)
    if (!r.formula_backed) c.proved = false;
  c.rows = std::move(rows);
  return c;
}

inline NonSLCertificate gap_growth_certificate(std::vector<Int> values, bool proved,
                                               std::string note) {
  if (values.size() < 3)
    throw std::domain_error("gap_growth_certificate: need at least 3 values");
  for (size_t i = 2; i < values.size(); ++i) {
    Int g1 = values[i - 1] - values[i - 2], g2 = values[i] - values[i - 1];
    if (!(g2 > g1) || sgn(g1) <= 0)
      throw std::domain_error("gap_growth_certificate: gaps must strictly increase");
  }
  NonSLCertificate c;
  c.kind = NonSLCertificate::Kind::gap_growth;
  c.proved = proved;
  c.gap_values = std::move(values);
  c.note = std::move(note);
  return c;
}

}  // namespace slrec
