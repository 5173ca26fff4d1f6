#include "braidcat/config.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace braidcat {

namespace {

bool canonical_less(const LPoint& a, const LPoint& b) {
  if (a.y != b.y) return b.y < a.y;  // y descending
  return a.x < b.x;                  // x ascending
}

}  // namespace

Configuration::Configuration(std::vector<LPoint> points) : points_(std::move(points)) {
  std::sort(points_.begin(), points_.end(), canonical_less);
  for (const LPoint& p : points_) {
    if (!p.x.in_open_unit() || !p.y.in_open_unit())
      throw std::invalid_argument("configuration point outside the open unit square");
  }
  for (std::size_t i = 0; i + 1 < points_.size(); ++i) {
    if (points_[i].x == points_[i + 1].x && points_[i].y == points_[i + 1].y)
      throw std::invalid_argument("configuration points must be pairwise distinct");
  }
}

Configuration Configuration::singleton(const Word& label) {
  return Configuration({LPoint{Dyadic::half(), Dyadic::half(), label}});
}

Configuration vstack(const Configuration& X, const Configuration& Y) {
  std::vector<LPoint> pts;
  pts.reserve(X.size() + Y.size());
  for (const LPoint& p : X.points()) pts.push_back(LPoint{p.x, p.y.halved_up(), p.label});
  for (const LPoint& p : Y.points()) pts.push_back(LPoint{p.x, p.y.halved(), p.label});
  return Configuration(std::move(pts));
}

Configuration hstack(const Configuration& X, const Configuration& Y) {
  std::vector<LPoint> pts;
  pts.reserve(X.size() + Y.size());
  for (const LPoint& p : X.points()) pts.push_back(LPoint{p.x.halved(), p.y, p.label});
  for (const LPoint& p : Y.points()) pts.push_back(LPoint{p.x.halved_up(), p.y, p.label});
  return Configuration(std::move(pts));
}

SlideKey slide_key(const Configuration& X) {
  SlideKey key;
  for (const LPoint& p : X.points()) {  // already y desc, x asc
    if (key.levels.empty() || key.levels.back().y != p.y)
      key.levels.push_back(SlideKey::Level{p.y, {}});
    key.levels.back().labels.push_back(p.label);
  }
  return key;
}

bool slide_equal(const Configuration& X, const Configuration& Y) {
  return slide_key(X) == slide_key(Y);
}

Configuration embed_word(const Word& c) {
  switch (c.kind()) {
    case Word::Kind::Unit:
      return Configuration::empty();
    case Word::Kind::Leaf:
      return Configuration::singleton(c);
    case Word::Kind::Tensor:
      return vstack(embed_word(c.left()), embed_word(c.right()));
  }
  return Configuration::empty();
}

std::vector<LPoint> canonical_order(const Configuration& X) { return X.points(); }

std::vector<Word> canonical_labels(const Configuration& X) {
  std::vector<Word> labels;
  labels.reserve(X.size());
  for (const LPoint& p : X.points()) labels.push_back(p.label);
  return labels;
}

LinearRep canonical_rep(const Configuration& X) {
  LinearRep rep;
  std::vector<Word> labels = canonical_labels(X);
  rep.word = right_nest_words(labels);
  rep.gamma = PointBraid::identity(std::move(labels));
  return rep;
}

std::string config_to_json(const Configuration& X) {
  nlohmann::ordered_json points = nlohmann::ordered_json::array();
  for (const LPoint& p : X.points()) {
    points.push_back({{"x", p.x.str()}, {"y", p.y.str()}, {"label", print_word(p.label)}});
  }
  nlohmann::ordered_json doc;
  doc["points"] = std::move(points);
  return doc.dump();
}

Configuration config_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("configuration JSON parse error: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("points") || !doc["points"].is_array())
    throw std::invalid_argument("configuration JSON must be {\"points\": [...]}");
  std::vector<LPoint> pts;
  for (const auto& item : doc["points"]) {
    if (!item.is_object() || !item.contains("x") || !item.contains("y") ||
        !item.contains("label"))
      throw std::invalid_argument("configuration point needs x, y, label");
    LPoint p;
    p.x = Dyadic::parse(item["x"].get<std::string>());
    p.y = Dyadic::parse(item["y"].get<std::string>());
    p.label = parse_word(item["label"].get<std::string>());
    if (!p.x.in_open_unit() || !p.y.in_open_unit())
      throw std::invalid_argument("configuration coordinates must lie strictly inside (0,1)");
    pts.push_back(std::move(p));
  }
  return Configuration(std::move(pts));
}

std::string slide_key_to_string(const SlideKey& k) {
  std::ostringstream os;
  for (std::size_t i = 0; i < k.levels.size(); ++i) {
    if (i) os << "; ";
    os << "y=" << k.levels[i].y.str() << ":";
    for (std::size_t j = 0; j < k.levels[i].labels.size(); ++j) {
      os << (j ? "," : " ") << print_word(k.levels[i].labels[j]);
    }
  }
  return os.str();
}

}  // namespace braidcat
