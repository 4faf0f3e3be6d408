#include "gaugering/io/state_json.hpp"

#include "gaugering/io/table.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace gaugering::io {

using nlohmann::ordered_json;

namespace {

ordered_json metadata_object(const Metadata& metadata) {
  ordered_json meta = ordered_json::object();
  for (const auto& [key, value] : metadata) meta[key] = value;
  return meta;
}

ordered_json parse_versioned(const std::string& text, const char* kind) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("malformed ") + kind + " JSON: " + e.what());
  }
  if (!j.contains("version") || !j["version"].is_number_integer())
    throw FormatVersionError(std::string(kind) + " JSON carries no integer version");
  const int version = j["version"].get<int>();
  if (version != kFormatVersion)
    throw FormatVersionError(std::string(kind) + " JSON version " + std::to_string(version) + ", expected " +
                             std::to_string(kFormatVersion));
  return j;
}

}  // namespace

std::string wavefunction_to_json(const RingWavefunction<double>& psi, const Metadata& metadata) {
  ordered_json j;
  j["version"] = kFormatVersion;
  j["grid"] = {{"n", psi.size()}, {"theta0", psi.theta(0)}, {"dtheta", psi.spacing()}};
  auto& amps = j["amplitudes"] = ordered_json::array();
  for (Eigen::Index i = 0; i < psi.size(); ++i) amps.push_back({psi[i].real(), psi[i].imag()});
  j["metadata"] = metadata_object(metadata);
  return j.dump() + "\n";
}

RingWavefunction<double> wavefunction_from_json(const std::string& text) {
  const auto j = parse_versioned(text, "wavefunction");
  try {
    const auto n = j.at("grid").at("n").get<Eigen::Index>();
    const auto& amps = j.at("amplitudes");
    if (static_cast<Eigen::Index>(amps.size()) != n) throw std::runtime_error("amplitude count differs from grid.n");
    RingWavefunction<double>::Values values(n);
    for (Eigen::Index i = 0; i < n; ++i) values[i] = {amps[i].at(0).get<double>(), amps[i].at(1).get<double>()};
    return RingWavefunction<double>(std::move(values));
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("malformed wavefunction JSON: ") + e.what());
  }
}

std::string relative_state_to_json(const RelativeEigenstate<double>& state, const Metadata& metadata) {
  ordered_json j;
  j["version"] = kFormatVersion;
  j["kind"] = "relative_eigenstate";
  j["q"] = state.shape().range_exponent();
  j["kappa"] = state.shape().kappa();
  j["p"] = state.sector().p;
  j["energy"] = state.energy();
  j["basis_size"] = state.basis().size();
  auto& amps = j["amplitudes"] = ordered_json::array();
  for (Eigen::Index i = 0; i < state.amplitudes().size(); ++i) amps.push_back(state.amplitudes()[i]);
  j["metadata"] = metadata_object(metadata);
  return j.dump() + "\n";
}

RelativeEigenstate<double> relative_state_from_json(const std::string& text) {
  const auto j = parse_versioned(text, "relative state");
  try {
    const MomentumSector sector{j.at("p").get<int>()};
    PlaneWaveBasis<double> basis(j.at("basis_size").get<int>(), sector);
    const auto& amps = j.at("amplitudes");
    if (static_cast<Eigen::Index>(amps.size()) != basis.size())
      throw std::runtime_error("amplitude count differs from basis_size");
    Eigen::VectorXd a(basis.size());
    for (Eigen::Index i = 0; i < basis.size(); ++i) a[i] = amps[i].get<double>();
    return RelativeEigenstate<double>(j.at("energy").get<double>(), std::move(a), std::move(basis),
                                      GaugeShape<double>(j.at("q").get<int>(), j.at("kappa").get<double>()));
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("malformed relative state JSON: ") + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MissingInputError("cannot read input file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
  const std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << contents;
}

}  // namespace gaugering::io
