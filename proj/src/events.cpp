// Copyright 2026 the chainacl authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "chainacl/events.hpp"

namespace chainacl {

void EventStream::push(const Event& e) {
  {
    std::lock_guard<std::mutex> lock(mu_);
    q_.push_back(e);
  }
  cv_.notify_all();
}

std::optional<Event> EventStream::tryNext() {
  std::lock_guard<std::mutex> lock(mu_);
  if (q_.empty()) return std::nullopt;
  Event e = std::move(q_.front());
  q_.pop_front();
  return e;
}

std::optional<Event> EventStream::waitNext(std::chrono::milliseconds timeout) {
  std::unique_lock<std::mutex> lock(mu_);
  if (!cv_.wait_for(lock, timeout, [this] { return !q_.empty(); })) {
    return std::nullopt;
  }
  Event e = std::move(q_.front());
  q_.pop_front();
  return e;
}

std::vector<Event> EventStream::drain() {
  std::lock_guard<std::mutex> lock(mu_);
  std::vector<Event> out(q_.begin(), q_.end());
  q_.clear();
  return out;
}

size_t EventStream::pending() const {
  std::lock_guard<std::mutex> lock(mu_);
  return q_.size();
}

std::shared_ptr<EventStream> EventHub::subscribe(EventFilter filter) {
  auto stream = std::make_shared<EventStream>();
  std::lock_guard<std::mutex> lock(mu_);
  subs_.emplace_back(std::move(filter), stream);
  return stream;
}

void EventHub::publish(const Event& e) {
  std::lock_guard<std::mutex> lock(mu_);
  for (auto& [filter, stream] : subs_) {
    if (filter.matches(e)) stream->push(e);
  }
}

}  // namespace chainacl
