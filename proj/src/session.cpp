#include "ncgr1/session.hpp"

namespace ncgr1 {

using nlohmann::json;

play_session::play_session(game_file game, mealy_strategy strategy, std::optional<moded_rank_table> ranks)
    : game_(std::move(game)), strategy_(std::move(strategy)), ranks_(std::move(ranks)), at_(strategy_.init) {
  if (game_.graph.owner(at_.state) != player::env) throw strategy_error("session must start at an environment state");
  if (ranks_ && (ranks_->n != strategy_.n || ranks_->m != strategy_.m)) ranks_.reset();
  fa_visits_.assign(game_.spec.assumptions.size(), 0);
  fg_visits_.assign(game_.spec.guarantees.size(), 0);
  count(at_.state);
}

void play_session::count(state_id q) {
  for (std::size_t b = 0; b < fa_visits_.size(); ++b) fa_visits_[b] += game_.spec.assumptions[b].contains(q);
  for (std::size_t a = 0; a < fg_visits_.size(); ++a) fg_visits_[a] += game_.spec.guarantees[a].contains(q);
}

std::vector<std::string> play_session::legal_env_moves() const {
  std::vector<std::string> out;
  for (state_id t : game_.graph.successors(at_.state)) out.push_back(game_.graph.name(t));
  return out;
}

json play_session::view() const {
  const auto& g = game_.graph;
  json v;
  v["state"] = g.name(at_.state);
  v["mode"] = {{"a", at_.m.a + 1}, {"b", at_.m.b + 1}};
  v["rank"] = nullptr;
  if (ranks_) {
    const rank r = ranks_->at(at_.m.a, at_.m.b, at_.state);
    if (r.defined()) v["rank"] = {r.i, r.j};
  }
  v["satisfiedAssumptions"] = fa_visits_;
  v["satisfiedGuarantees"] = fg_visits_;
  v["legalEnvMoves"] = legal_env_moves();
  v["steps"] = steps_;
  return v;
}

json play_session::env_move(const std::string& to) {
  const auto& g = game_.graph;
  auto target = g.find(to);
  bool legal = false;
  if (target)
    for (state_id t : g.successors(at_.state)) legal = legal || t == *target;
  if (!legal)
    throw illegal_move("illegal environment move " + g.name(at_.state) + " -> " + to, legal_env_moves());

  auto upd = strategy_.env_updates.find({at_, *target});
  if (upd == strategy_.env_updates.end()) throw strategy_error("strategy has no mode update for this move");
  const moded_state mid{*target, upd->second};
  count(mid.state);
  auto mv = strategy_.sys_moves.find(mid);
  if (mv == strategy_.sys_moves.end()) throw strategy_error("strategy has no reply at " + g.name(mid.state));
  at_ = mv->second;
  count(at_.state);
  ++steps_;

  json out;
  out["envMove"] = {{"from", g.name(upd->first.first.state)}, {"to", to}, {"mode", {{"a", mid.m.a + 1}, {"b", mid.m.b + 1}}}};
  out["sysMove"] = {{"from", to}, {"to", g.name(at_.state)}, {"mode", {{"a", at_.m.a + 1}, {"b", at_.m.b + 1}}}};
  out["view"] = view();
  return out;
}

}  // namespace ncgr1
