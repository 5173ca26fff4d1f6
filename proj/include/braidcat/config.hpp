#ifndef BRAIDCAT_CONFIG_HPP
#define BRAIDCAT_CONFIG_HPP

#include <string>
#include <vector>

#include "braidcat/braid.hpp"
#include "braidcat/dyadic.hpp"
#include "braidcat/words.hpp"

namespace braidcat {

// A point in the open unit square labelled by an object of the ambient
// category (an arbitrary Word; plain generators are single leaves).
struct LPoint {
  Dyadic x;
  Dyadic y;
  Word label = Word::unit();

  friend bool operator==(const LPoint& a, const LPoint& b) {
    return a.x == b.x && a.y == b.y && a.label == b.label;
  }
};

// A finite set of labelled points, pairwise distinct (x,y). Stored sorted in
// canonical order (y descending, then x ascending) so value equality is
// set equality.
class Configuration {
public:
  Configuration() = default;
  explicit Configuration(std::vector<LPoint> points);

  static Configuration empty() { return Configuration(); }
  static Configuration singleton(const Word& label);  // point at (1/2, 1/2)

  const std::vector<LPoint>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }

  friend bool operator==(const Configuration& a, const Configuration& b) {
    return a.points_ == b.points_;
  }
  friend bool operator!=(const Configuration& a, const Configuration& b) {
    return !(a == b);
  }

private:
  std::vector<LPoint> points_;  // canonical order
};

// The complete slide-equivalence invariant: the exact y-levels, top to
// bottom, each with its left-to-right label sequence.
struct SlideKey {
  struct Level {
    Dyadic y;
    std::vector<Word> labels;

    friend bool operator==(const Level& a, const Level& b) {
      return a.y == b.y && a.labels == b.labels;
    }
  };
  std::vector<Level> levels;  // y strictly decreasing

  friend bool operator==(const SlideKey& a, const SlideKey& b) {
    return a.levels == b.levels;
  }
  friend bool operator!=(const SlideKey& a, const SlideKey& b) { return !(a == b); }
};

// Braids whose strands are configuration points, labelled by the point
// labels.
using PointBraid = LabelledBraid<Word>;

// A chosen linearisation of a configuration: a parenthesised word and the
// braid from the configuration's canonical strand order to the word's leaf
// order. gamma's source labels are the canonical-order point labels.
struct LinearRep {
  Word word = Word::unit();
  PointBraid gamma;
};

// Vertical stacking: X on top (y -> (y+1)/2), Y below (y -> y/2).
Configuration vstack(const Configuration& X, const Configuration& Y);

// Horizontal stacking: X on the left (x -> x/2), Y on the right
// (x -> (x+1)/2).
Configuration hstack(const Configuration& X, const Configuration& Y);

SlideKey slide_key(const Configuration& X);

bool slide_equal(const Configuration& X, const Configuration& Y);

// The embedding of a parenthesised word as a vertical-line configuration:
// unit -> empty, label -> centre point, tensor -> vstack of the parts.
Configuration embed_word(const Word& c);

// Points sorted by y descending then x ascending.
std::vector<LPoint> canonical_order(const Configuration& X);

std::vector<Word> canonical_labels(const Configuration& X);

// Canonical linearisation: right-nested word over the canonical labels, with
// the identity linearising braid.
LinearRep canonical_rep(const Configuration& X);

// JSON round-trip: {"points":[{"x":"3/8","y":"1/2","label":"a"},...]}.
// Coordinates are dyadic strings; labels use the word text grammar.
std::string config_to_json(const Configuration& X);
Configuration config_from_json(const std::string& text);  // throws std::invalid_argument

std::string slide_key_to_string(const SlideKey& k);

}  // namespace braidcat

#endif
