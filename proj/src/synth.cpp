#include "assocnb/synth.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <random>

#include "assocnb/errors.hpp"

namespace assocnb {

namespace {

struct Lexicon {
  const char* name;
  std::vector<std::vector<std::string>> clusters;
  std::vector<std::string> terms;
};

const std::vector<Lexicon>& lexicons() {
  static const std::vector<Lexicon> all = {
      {"computer-science",
       {{"graph", "vertex", "edge", "path", "algorithm", "shortest"},
        {"parallel", "processor", "message-passing", "communication", "network"},
        {"multicast", "routing", "destination", "message", "broadcast"},
        {"database", "query", "index", "transaction", "storage"},
        {"compiler", "program", "code", "optimization", "language"},
        {"cache", "memory", "latency", "architecture", "instruction"},
        {"learning", "classifier", "feature", "training", "dataset"},
        {"protocol", "packet", "router", "throughput", "congestion"},
        {"software", "testing", "component", "framework", "requirement"},
        {"scheduling", "task", "workload", "cluster", "distributed"}},
       {"complexity", "bound", "time", "tree", "search", "hash", "node", "server",
        "client", "security", "encryption", "kernel", "thread", "concurrency",
        "lock", "virtual", "machine", "logic", "automaton", "grammar", "parser",
        "heuristic", "approximation", "randomized", "sorting", "matrix", "vector",
        "interface", "middleware", "replication", "consistency", "peer",
        "topology", "bandwidth", "verification", "specification", "semantics",
        "type", "object", "module"}},
      {"electrical-electronic",
       {{"power", "voltage", "current", "load", "feeder"},
        {"oscillation", "damping", "stability", "generator", "excitation"},
        {"signal", "filter", "noise", "amplifier", "gain"},
        {"circuit", "transistor", "gate", "chip", "fabrication"},
        {"antenna", "wireless", "channel", "modulation", "receiver"},
        {"motor", "drive", "torque", "inverter", "speed"},
        {"distribution", "customer", "demand", "energy", "grid"},
        {"sensor", "calibration", "accuracy", "device", "instrument"},
        {"transformer", "insulation", "fault", "protection", "relay"},
        {"battery", "charging", "converter", "switching", "ripple"}},
       {"harmonic", "phase", "transmission", "line", "capacitor", "resistor",
        "semiconductor", "digital", "analog", "bandwidth", "controller",
        "feedback", "tariff", "outage", "substation", "reactive", "impedance",
        "spectrum", "oscillator", "diode", "rectifier", "photovoltaic", "wind",
        "turbine", "electrode", "magnetic", "flux", "coil", "winding", "pulse",
        "waveform", "sampling", "quantization", "encoder", "decoder", "loss",
        "dielectric", "conductor", "cable", "busbar"}},
      {"mechanical",
       {{"shear", "stress", "strain", "experiment", "specimen"},
        {"heat", "transfer", "temperature", "thermal", "conduction"},
        {"fluid", "flow", "turbulence", "velocity", "pressure"},
        {"fatigue", "crack", "fracture", "material", "toughness"},
        {"combustion", "engine", "fuel", "emission", "cylinder"},
        {"vibration", "instability", "beam", "damper", "resonance"},
        {"welding", "steel", "alloy", "hardness", "microstructure"},
        {"robot", "manipulator", "kinematics", "actuator", "gripper"},
        {"friction", "wear", "lubrication", "surface", "contact"},
        {"element", "mesh", "deformation", "plasticity", "buckling"}},
       {"rate", "bearing", "gear", "shaft", "spring", "nozzle", "boundary",
        "layer", "convection", "radiation", "viscosity", "density", "piston",
        "crankshaft", "torsion", "bending", "modulus", "elasticity",
        "composite", "fiber", "laminate", "casting", "machining", "tool",
        "cutting", "coolant", "duct", "pump", "valve", "compressor", "exhaust",
        "inertia", "momentum", "stiffness", "creep", "weld", "rivet", "bolt",
        "coating", "corrosion"}},
  };
  return all;
}

const std::vector<std::string>& shared_terms() {
  static const std::vector<std::string> words = {
      "system", "model", "design", "analysis", "method", "result", "approach",
      "performance", "simulation", "control", "data", "application", "problem",
      "technique", "experimental", "proposed", "efficiency", "parameter",
      "evaluation", "framework", "structure", "process", "measurement",
      "optimization", "condition", "dynamic", "study", "test"};
  return words;
}

const std::array<const char*, 22>& glue_words() {
  static const std::array<const char*, 22> words = {
      "the", "of", "and", "in", "a", "for", "is", "we", "this", "with", "on",
      "to", "by", "are", "an", "that", "which", "from", "as", "its", "these",
      "our"};
  return words;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (const unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }
  bool chance(unsigned percent) { return below(100) < percent; }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

std::string plural_of(const std::string& w) {
  const char last = w.back();
  if (last == 's' || last == 'x' || last == 'h') return w + "es";
  return w + "s";
}

std::string render_document(const Lexicon& lex, Rng& rng) {
  std::map<std::string, std::size_t> counts;
  auto add = [&](const std::string& w, std::size_t n) {
    auto& c = counts[w];
    c = std::max(c, n);
  };

  // About one document in eight is too thin to yield a full transaction.
  const bool thin = rng.chance(12);

  std::vector<std::size_t> cluster_ids(lex.clusters.size());
  for (std::size_t i = 0; i < cluster_ids.size(); ++i) cluster_ids[i] = i;
  rng.shuffle(cluster_ids);
  const std::size_t n_clusters = thin ? 1 : 2;
  for (std::size_t c = 0; c < n_clusters; ++c) {
    const auto& cluster = lex.clusters[cluster_ids[c]];
    for (const auto& w : cluster) {
      if (rng.chance(85)) add(w, 2 + rng.below(2));
    }
  }

  auto terms = lex.terms;
  rng.shuffle(terms);
  const std::size_t repeated_terms = thin ? 3 + rng.below(3) : 6 + rng.below(4);
  std::size_t t = 0;
  for (; t < repeated_terms && t < terms.size(); ++t) add(terms[t], 2);

  auto shared = shared_terms();
  rng.shuffle(shared);
  const std::size_t repeated_shared = thin ? 1 : 2 + rng.below(2);
  std::size_t s = 0;
  for (; s < repeated_shared; ++s) add(shared[s], 2);

  std::vector<std::string> tokens;
  for (const auto& [w, n] : counts) {
    for (std::size_t i = 0; i < n; ++i) {
      // Occasionally use the plural for a later occurrence.
      tokens.push_back(i > 0 && rng.chance(15) ? plural_of(w) : w);
    }
  }
  const std::size_t singles = 10 + rng.below(8);
  for (std::size_t i = 0; i < singles; ++i) {
    const bool from_terms = rng.chance(60) && t < terms.size();
    if (from_terms) {
      tokens.push_back(terms[t++]);
    } else if (s < shared.size()) {
      tokens.push_back(shared[s++]);
    }
  }
  rng.shuffle(tokens);

  std::string text;
  std::size_t i = 0;
  while (i < tokens.size()) {
    const std::size_t len = std::min(tokens.size() - i, 5 + rng.below(5));
    std::string sentence;
    for (std::size_t j = 0; j < len; ++j, ++i) {
      if (rng.chance(55)) {
        sentence += glue_words()[rng.below(glue_words().size())];
        sentence += ' ';
      }
      sentence += tokens[i];
      sentence += (j + 1 == len) ? "." : (rng.chance(12) ? ", " : " ");
    }
    sentence[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(sentence[0])));
    if (!text.empty()) text += ' ';
    text += sentence;
  }
  text += '\n';
  return text;
}

}  // namespace

SynthOptions SynthOptions::balanced(std::size_t per_category, std::uint64_t seed) {
  SynthOptions o;
  o.seed = seed;
  for (const auto& name : synth_categories()) o.documents_per_category[name] = per_category;
  return o;
}

SynthOptions SynthOptions::skewed(std::uint64_t seed) {
  SynthOptions o;
  o.seed = seed;
  o.documents_per_category = {
      {"computer-science", 47}, {"electrical-electronic", 48}, {"mechanical", 20}};
  return o;
}

std::vector<std::string> synth_categories() {
  std::vector<std::string> names;
  for (const auto& lex : lexicons()) names.emplace_back(lex.name);
  std::sort(names.begin(), names.end());
  return names;
}

std::vector<RawDocument> generate_corpus(const SynthOptions& options) {
  std::vector<RawDocument> docs;
  for (const auto& [category, count] : options.documents_per_category) {
    const auto lex = std::find_if(lexicons().begin(), lexicons().end(),
                                  [&](const Lexicon& l) { return category == l.name; });
    if (lex == lexicons().end()) {
      throw Error(ErrorCode::invalid_argument, "unknown synthetic category '" + category + "'");
    }
    for (std::size_t i = 0; i < count; ++i) {
      Rng rng(options.seed ^ fnv1a(category) ^ ((i + 1) * 0x9E3779B97F4A7C15ull));
      char name[32];
      std::snprintf(name, sizeof name, "doc-%03zu.txt", i + 1);
      docs.push_back({category + "/" + name, category, render_document(*lex, rng)});
    }
  }
  std::sort(docs.begin(), docs.end(),
            [](const RawDocument& a, const RawDocument& b) { return a.id < b.id; });
  return docs;
}

}  // namespace assocnb
