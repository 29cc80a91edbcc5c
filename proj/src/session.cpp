#include "stc/session.hpp"

#include <fstream>

#include "stc/error.hpp"
#include "stc/io.hpp"

namespace stc {

SessionStore::SessionStore(std::optional<std::filesystem::path> persist_dir) : dir_(std::move(persist_dir)) {
  if (!dir_) return;
  std::filesystem::create_directories(*dir_);
  for (auto& f : std::filesystem::directory_iterator(*dir_)) {
    if (f.path().extension() != ".json") continue;
    std::ifstream in(f.path());
    auto j = json::parse(in, nullptr, false);
    if (j.is_discarded() || !j.contains("id")) continue;
    auto doc = trace_from_json(j);
    auto s = std::make_shared<Session>();
    s->id = j["id"].get<std::string>();
    s->label = j.value("label", std::string{});
    s->initial = doc.initial;
    s->created = s->updated = std::chrono::system_clock::now();
    Coloring cur = s->initial;
    for (auto& st : doc.steps) s->undo.push_back(apply_move(cur, st.kind, st.path));
    s->current = cur;
    sessions_[s->id] = s;
    if (s->id.size() > 1 && s->id[0] == 's') next_ = std::max(next_, std::stoi(s->id.substr(1)) + 1);
  }
}

std::shared_ptr<Session> SessionStore::create(const Coloring& initial, const std::string& label) {
  require_stc(initial, "session");
  auto s = std::make_shared<Session>();
  {
    std::lock_guard lock(mu_);
    s->id = "s" + std::to_string(next_++);
    s->label = label;
    s->initial = initial;
    s->current = initial;
    s->created = s->updated = std::chrono::system_clock::now();
    sessions_[s->id] = s;
  }
  persist(*s);
  return s;
}

std::shared_ptr<Session> SessionStore::get(const std::string& id) const {
  std::lock_guard lock(mu_);
  auto it = sessions_.find(id);
  if (it == sessions_.end()) fail(ErrorKind::NotFound, "unknown session '" + id + "'");
  return it->second;
}

std::vector<std::string> SessionStore::ids() const {
  std::lock_guard lock(mu_);
  std::vector<std::string> out;
  for (auto& [k, v] : sessions_) out.push_back(k);
  return out;
}

void SessionStore::persist(const Session& s) const {
  if (!dir_) return;
  json j = steps_to_json(s.initial, s.undo);
  j["id"] = s.id;
  j["label"] = s.label;
  auto tmp = *dir_ / (s.id + ".json.tmp");
  std::ofstream(tmp) << dump(j);
  std::filesystem::rename(tmp, *dir_ / (s.id + ".json"));
}

ReductionStep session_apply(Session& s, MoveKind kind, const Mcap& path) {
  Coloring next = s.current;
  auto step = apply_move(next, kind, path);
  s.current = std::move(next);
  s.undo.push_back(step);
  s.redo.clear();
  s.updated = std::chrono::system_clock::now();
  return step;
}

void session_undo(Session& s) {
  if (s.undo.empty()) fail(ErrorKind::Mismatch, "nothing to undo");
  auto step = s.undo.back();
  s.undo.pop_back();
  s.current = replay(s.initial, s.undo);
  s.redo.push_back(step);
  s.updated = std::chrono::system_clock::now();
}

void session_redo(Session& s) {
  if (s.redo.empty()) fail(ErrorKind::Mismatch, "nothing to redo");
  auto step = s.redo.back();
  s.redo.pop_back();
  Coloring next = s.current;
  apply_move(next, step.kind, step.path);
  s.current = std::move(next);
  s.undo.push_back(step);
  s.updated = std::chrono::system_clock::now();
}

}  // namespace stc
