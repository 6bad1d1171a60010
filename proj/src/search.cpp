#include "lambek/search.hpp"

#include <omp.h>

#include <algorithm>

namespace lambek {

CountermodelResult countermodel(const Sequent& s, const SearchConfig& cfg) {
  CountermodelResult res;
  const std::size_t batch_size = 1024;
  std::vector<Frame> batch;
  batch.reserve(batch_size);

  auto flush = [&]() -> bool {  // returns true when a hit was found
    if (batch.empty()) return false;
    int hit = -1;
#pragma omp parallel
    {
      int mine = -1;
#pragma omp for schedule(static) nowait
      for (std::int64_t i = 0; i < static_cast<std::int64_t>(batch.size());
           ++i) {
        if (mine != -1) continue;
        FrameValidResult fv =
            frame_valid_serial(batch[i], s, cfg.max_valuations);
        if (!fv.valid) mine = static_cast<int>(i);
      }
#pragma omp critical
      if (mine != -1 && (hit == -1 || mine < hit)) hit = mine;
    }
    if (hit == -1) {
      res.frames_tried += batch.size();
      batch.clear();
      return false;
    }
    res.frames_tried += hit + 1;
    res.found = true;
    res.frame = batch[hit];
    res.valuation =
        frame_valid_serial(res.frame, s, cfg.max_valuations).countervaluation;
    batch.clear();
    return true;
  };

  EnumStats stats = enumerate_frames(cfg, [&](const Frame& f) {
    batch.push_back(f);
    if (batch.size() >= batch_size) return !flush();
    return true;
  });
  if (!res.found) flush();
  res.budget_exhausted = !stats.completed && !res.found;
  return res;
}

namespace {

struct ClassifiedSequent {
  Sequent s;
  std::string schema;
  bool uses_box = false, uses_dia = false;
};

std::vector<ClassifiedSequent> classify(const std::vector<Schema>& schemata) {
  std::vector<ClassifiedSequent> out;
  for (const Schema& sch : schemata)
    for (const Sequent& s : sch.sequents) {
      ClassifiedSequent c{s, sch.name, false, false};
      struct Scan {
        bool *bx, *di;
        void go(const Formula& f) {
          if (f.kind == Conn::Box) *bx = true;
          if (f.kind == Conn::Dia) *di = true;
          if (f.left) go(*f.left);
          if (f.right) go(*f.right);
        }
      } scan{&c.uses_box, &c.uses_dia};
      scan.go(*s.lhs);
      scan.go(*s.rhs);
      out.push_back(std::move(c));
    }
  return out;
}

}  // namespace

SweepOutcome validity_sweep(const std::vector<Schema>& schemata,
                            const SearchConfig& cfg) {
  SweepOutcome out;
  std::vector<ClassifiedSequent> seqs = classify(schemata);

  std::vector<Frame> cores;
  enumerate_cores(cfg, [&](const Frame& core) {
    cores.push_back(core);
    return true;
  });
  out.cores = cores.size();

  std::vector<CheckReport> reports(cores.size());
  std::vector<std::uint64_t> frames(cores.size(), 0), checks(cores.size(), 0);

#pragma omp parallel for schedule(dynamic)
  for (std::int64_t ci = 0; ci < static_cast<std::int64_t>(cores.size());
       ++ci) {
    const Frame& core = cores[ci];
    CheckReport& rep = reports[ci];
    auto run = [&](const Frame& f, const ClassifiedSequent& c) {
      ++checks[ci];
      FrameValidResult fv = frame_valid(f, c.s, cfg.max_valuations, false);
      if (!fv.valid) {
        std::string val;
        for (const auto& [atom, mask] : fv.countervaluation)
          val += atom + ":" + std::to_string(mask) + " ";
        rep.fail("schema-not-valid",
                 {c.schema, print_sequent(c.s),
                  "core#" + std::to_string(ci), val});
      }
    };
    for (const ClassifiedSequent& c : seqs)
      if (!c.uses_box && !c.uses_dia) run(core, c);
    auto boxes = valid_box_families(core);
    auto dias = valid_dia_families(core);
    frames[ci] =
        static_cast<std::uint64_t>(boxes.size()) * dias.size();
    std::vector<Mask> empty(core.size(), 0);
    for (const auto& bx : boxes) {
      Frame f = assemble_frame(core, bx, empty);
      for (const ClassifiedSequent& c : seqs)
        if (c.uses_box && !c.uses_dia) run(f, c);
    }
    for (const auto& di : dias) {
      Frame f = assemble_frame(core, empty, di);
      for (const ClassifiedSequent& c : seqs)
        if (!c.uses_box && c.uses_dia) run(f, c);
    }
    bool mixed = std::any_of(seqs.begin(), seqs.end(), [](const auto& c) {
      return c.uses_box && c.uses_dia;
    });
    if (mixed)
      for (const auto& bx : boxes)
        for (const auto& di : dias) {
          Frame f = assemble_frame(core, bx, di);
          for (const ClassifiedSequent& c : seqs)
            if (c.uses_box && c.uses_dia) run(f, c);
        }
  }
  for (std::size_t i = 0; i < cores.size(); ++i) {
    out.report.merge(reports[i]);
    out.frames += frames[i];
    out.checks += checks[i];
  }
  return out;
}

SweepOutcome soundness_sweep(const SearchConfig& cfg) {
  return validity_sweep(base_axioms(Signature::monomodal()), cfg);
}

}  // namespace lambek
