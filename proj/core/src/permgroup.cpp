#include "caystab/permgroup.hpp"

#include "caystab/errors.hpp"

namespace caystab {

PermGroup::PermGroup(int degree, std::vector<Permutation> generators)
    : degree_(degree), input_gens_(std::move(generators)) {
  if (degree_ < 0) throw InvalidParameterError("negative degree");
  for (const auto& g : input_gens_)
    if (g.degree() != degree_)
      throw InvalidParameterError("generator degree mismatch");

  for (const auto& g : input_gens_)
    if (!g.is_identity()) sift_in(0, g);

  order_ = 1;
  for (const auto& level : levels_) order_ *= static_cast<long long>(level.orbit.size());
}

std::vector<int> PermGroup::base() const {
  std::vector<int> points;
  points.reserve(levels_.size());
  for (const auto& level : levels_) points.push_back(level.base_point);
  return points;
}

Permutation PermGroup::sift(const Permutation& p) const {
  if (p.degree() != degree_) throw InvalidParameterError("degree mismatch in sift");
  Permutation residue = p;
  for (const auto& level : levels_) {
    if (residue.is_identity()) break;
    int image = residue(level.base_point);
    int pos = level.orbit_pos[image];
    if (pos < 0) return residue;
    residue = residue.then(level.transversal[pos].inverse());
  }
  return residue;
}

bool PermGroup::contains(const Permutation& p) const {
  return sift(p).is_identity();
}

void PermGroup::sift_in(int level, Permutation p) {
  for (int i = level; i < static_cast<int>(levels_.size()); ++i) {
    if (p.is_identity()) return;
    Level& current = levels_[i];
    int image = p(current.base_point);
    int pos = current.orbit_pos[image];
    if (pos < 0) {
      extend(i, p); // p escapes the orbit here: new strong generator
      return;
    }
    p = p.then(current.transversal[pos].inverse());
  }
  if (!p.is_identity()) extend(static_cast<int>(levels_.size()), p);
}

void PermGroup::extend(int level, const Permutation& g) {
  if (level == static_cast<int>(levels_.size())) {
    int moved = -1;
    for (int v = 0; v < degree_; ++v)
      if (g(v) != v) {
        moved = v;
        break;
      }
    Level fresh;
    fresh.base_point = moved;
    fresh.orbit = {moved};
    fresh.orbit_pos.assign(degree_, -1);
    fresh.orbit_pos[moved] = 0;
    fresh.transversal = {Permutation::identity(degree_)};
    levels_.push_back(std::move(fresh));
  }
  levels_[level].gens.push_back(g);
  grow_orbit(level, levels_[level].gens.size() - 1);
}

void PermGroup::grow_orbit(int level, std::size_t first_new_gen) {
  Level& current = levels_[level];
  const std::size_t old_orbit_size = current.orbit.size();

  // breadth-first orbit extension: old points through the new generator,
  // then new points through every generator
  for (std::size_t i = 0; i < current.orbit.size(); ++i) {
    std::size_t gen_from = (i < old_orbit_size) ? first_new_gen : 0;
    for (std::size_t j = gen_from; j < current.gens.size(); ++j) {
      int image = current.gens[j](current.orbit[i]);
      if (current.orbit_pos[image] < 0) {
        current.orbit_pos[image] = static_cast<int>(current.orbit.size());
        current.orbit.push_back(image);
        current.transversal.push_back(
            current.transversal[i].then(current.gens[j]));
      }
    }
  }

  // Schreier generators for the new (point, generator) pairs. The recursive
  // sift_in can reallocate levels_, so re-index instead of holding a
  // reference.
  const std::size_t orbit_size = current.orbit.size();
  const std::size_t gen_count = current.gens.size();
  for (std::size_t i = 0; i < orbit_size; ++i) {
    std::size_t gen_from = (i < old_orbit_size) ? first_new_gen : 0;
    for (std::size_t j = gen_from; j < gen_count; ++j) {
      const Level& here = levels_[level];
      int image = here.gens[j](here.orbit[i]);
      Permutation schreier =
          here.transversal[i].then(here.gens[j]).then(
              here.transversal[here.orbit_pos[image]].inverse());
      if (!schreier.is_identity()) sift_in(level + 1, schreier);
    }
  }
}

} // namespace caystab
