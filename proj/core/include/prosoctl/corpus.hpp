#pragma once

#include <cstdint>
#include <iosfwd>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace prosoctl {

// Thrown on malformed input files; message carries the line number.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when a corpus/utterance violates a structural invariant; message
// names the utterance and the violation.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Word {
  std::string token;
  int phone_count = 0;
  std::vector<int> phone_symbols;  // length == phone_count
  double start_time = 0.0;         // seconds
  double end_time = 0.0;           // seconds, > start_time
  bool emphasized = false;

  double duration() const { return end_time - start_time; }
};

struct F0Frame {
  double time = 0.0;  // seconds
  double f0 = 0.0;    // Hz, meaningful only when voiced
  bool voiced = false;
};

// Word-aligned transcript plus f0 track. Words are time-ordered and
// non-overlapping; inter-word gaps are silence and carry no phones.
struct Utterance {
  std::string id;
  int speaker = 0;
  std::vector<Word> words;
  std::vector<F0Frame> f0_track;  // strictly increasing in time

  int total_phones() const;
};

struct Corpus {
  std::vector<Utterance> utterances;
  std::set<int> speakers;
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
  std::string to_string() const;
};

struct SynthConfig {
  int n_utterances = 100;
  int min_phones_per_word = 2;
  int max_phones_per_word = 6;
  int min_words_per_utterance = 4;
  int max_words_per_utterance = 8;
  double base_log_dur = -2.5257286443082556;  // ln(0.08 s) per phone
  double base_f0_spread = 0.4;                // nats of log-f0 spread
  double emphasis_dur_effect = 0.0;           // added to per-phone log duration
  double emphasis_spread_effect = 0.0;        // added to word log-f0 spread
  double emphasis_rate = 0.0;                 // P(word emphasized)
  double noise_scale = 0.0;                   // stddev of per-word jitter
  uint64_t rng_seed = 0;
};

ValidationReport validate_utterance(const Utterance& u);

// JSON-lines corpus files, one utterance per line. Keys are emitted in a
// fixed order so save -> load -> save round trips are byte-stable.
Corpus load_corpus(const std::string& path);
Corpus load_corpus(std::istream& in, const std::string& stream_name);
void save_corpus(const Corpus& c, const std::string& path);
void save_corpus(const Corpus& c, std::ostream& out);

// Deterministic generator with planted emphasis effects. Word log-f0 ramps
// are constructed so the extracted spread equals the planted spread exactly.
Corpus synth_corpus(const SynthConfig& cfg);

// Deterministic utterance-level split; dev size = round(fraction*n) clamped
// to [1, n-1]. Relative corpus order is preserved inside each side.
std::pair<Corpus, Corpus> split_heldout(const Corpus& c, double fraction, uint64_t seed);

}  // namespace prosoctl
