#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "gfa/diagnostics.hpp"
#include "gfa/embedding.hpp"
#include "gfa/topology.hpp"

namespace gfa {

using json = nlohmann::json;

json to_json(Cplx v);
json to_json(const Ambient& a);
json to_json(const ShrinkingFamily& f);
json to_json(const WeightFunction& w);
json to_json(const SpaceIndex& s);
json to_json(const GridProvenance& p);
json to_json(const SampleGrid& g); // full point list; byte-stable
json to_json(const KernelStats& k);
json to_json(const NormCertificate& c);
json to_json(const LaurentSeries& s);
json to_json(const RichardsonResult& r);
json to_json(const NullTestReport& r);
json to_json(const ModerateVerdict& v);
json to_json(const NegligibleVerdict& v);
json to_json(const GnNorm& n);
json to_json(const InvertibilityVerdict& v);
json to_json(const SharpVerdict& v);
json to_json(const PsiCertificate& c);
json to_json(const ChainCertificates& c);
json to_json(const BoundedVerdict& v);
json to_json(const ExtractionReport& r);
json to_json(const EmbeddingBoundCertificate& c);
json to_json(const AssociationReport& r);

/// Fixed-format decimal for CSV cells (shortest round-trip).
std::string csv_number(double v);

/// Write-then-rename; reports appear atomically and byte-identically for
/// identical inputs.
void write_text_atomic(const std::filesystem::path& path, const std::string& content);

} // namespace gfa
