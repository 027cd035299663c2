#pragma once

#include <string>

#include "ziso/certify.hpp"
#include "ziso/core.hpp"
#include "ziso/grid2d.hpp"
#include "ziso/search.hpp"

namespace ziso {

// JSON documents carry a "schema" tag; the scan CSV repeats it in a leading
// comment line so golden files stay self-describing.

std::string boundary_report_json(const GeneratorSet& g, const ZSet& a, BoundaryKind kind);
std::string family_json(const OptimizerFamily& fam);
std::string family2d_json(const OptimizerFamily2D& fam);
std::string nest_json(const OptimizerFamily& f1, const OptimizerFamily& f2,
                      const NestVerdict& verdict);
std::string scan_json(const ScanReport& report);
std::string scan_csv(const ScanReport& report);
std::string certificate_json(const GeneratorSet& g, const ExpansionCertificate& cert,
                             Int n_cert_edge, Int n_cert_vertex,
                             const EmpiricalThreshold* emp_edge = nullptr,
                             const EmpiricalThreshold* emp_vertex = nullptr);

}  // namespace ziso
