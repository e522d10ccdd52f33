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

#include <doctest.h>

#include <map>
#include <random>

#include "chainacl/contracts/acc.hpp"
#include "chainacl/contracts/rc.hpp"
#include "chainacl/world.hpp"

using namespace chainacl;

namespace {

struct RcRig {
  World world;
  Address admin;
  Address serverA;
  Address sensorB;
  Address rc;
  Address acc1;
  Address acc2;
  uint64_t nonce = 0;

  RcRig() : world(World(31)) {
    admin = world.createAccount();
    serverA = world.createAccount();
    sensorB = world.createAccount();
    rc = world.deployContract(admin, RegisterContract::kKind, {});
    acc1 = world.deployContract(sensorB, AccessControlContract::kKind,
                                {Value(serverA), Value(sensorB)});
    acc2 = world.deployContract(sensorB, AccessControlContract::kKind,
                                {Value(serverA), Value(sensorB)});
  }

  Receipt call(const Address& sender, const std::string& abi, ValueList args) {
    Transaction tx = Transaction::make(sender, rc, abi, std::move(args), 0, ++nonce);
    return world.execTransaction(tx, 1, 0);
  }

  Receipt registerMethod(const Address& sender, const std::string& name,
                         const Address& subject, const Address& object,
                         const Address& creator, const Address& sc) {
    return call(sender, "methodRegister",
                {Value(name), Value(subject), Value(object),
                 Value(std::string("ACC 1")), Value(creator), Value(sc),
                 Value(std::string("accessControl")),
                 Value(std::string("policyAdd"))});
  }

  const RegisterContract& view() const {
    const auto* c = world.contractAs<RegisterContract>(rc);
    REQUIRE(c != nullptr);
    return *c;
  }
};

}  // namespace

TEST_CASE("register and look up a method row") {
  RcRig rig;
  REQUIRE(rig.registerMethod(rig.sensorB, "Method 1", rig.serverA, rig.sensorB,
                             rig.sensorB, rig.acc1)
              .ok);

  const MethodEntry* e = rig.view().entry("Method 1");
  REQUIRE(e != nullptr);
  CHECK(e->subject == rig.serverA);
  CHECK(e->object == rig.sensorB);
  CHECK(e->creator == rig.sensorB);
  CHECK(e->scAddress == rig.acc1);
  CHECK(e->abiList == std::vector<std::string>{"accessControl", "policyAdd"});

  ValueList got = rig.world.callReadOnly(rig.serverA, rig.rc, "getContract",
                                         {Value(std::string("Method 1"))});
  REQUIRE(got.size() == 3);
  CHECK(got[0].asAddr() == rig.acc1);
  CHECK(got[1].asStr() == "accessControl");

  CHECK_THROWS_AS(rig.world.callReadOnly(rig.serverA, rig.rc, "getContract",
                                         {Value(std::string("Method 9"))}),
                  ContractError);
}

TEST_CASE("the judge row keeps blank subject and object columns") {
  RcRig rig;
  Address blank;
  Receipt r = rig.call(rig.admin, "methodRegister",
                       {Value(std::string("JC")), Value(blank), Value(blank),
                        Value(std::string("Judge")), Value(rig.admin),
                        Value(rig.acc1),  // stand-in alive contract
                        Value(std::string("misbehaviorJudge"))});
  REQUIRE(r.ok);
  const MethodEntry* e = rig.view().entry("JC");
  CHECK(e->subject.isZero());
  CHECK(e->object.isZero());
  CHECK(e->abiList == std::vector<std::string>{"misbehaviorJudge"});
}

TEST_CASE("registration gates: creator mismatch, duplicates, dangling address") {
  RcRig rig;
  Receipt mismatch = rig.registerMethod(rig.serverA, "Method 1", rig.serverA,
                                        rig.sensorB, rig.sensorB, rig.acc1);
  CHECK_FALSE(mismatch.ok);
  CHECK(mismatch.code == ErrCode::CreatorMismatch);

  REQUIRE(rig.registerMethod(rig.sensorB, "Method 1", rig.serverA, rig.sensorB,
                             rig.sensorB, rig.acc1)
              .ok);
  Receipt dup = rig.registerMethod(rig.sensorB, "Method 1", rig.serverA,
                                   rig.sensorB, rig.sensorB, rig.acc2);
  CHECK_FALSE(dup.ok);
  CHECK(dup.code == ErrCode::DuplicateName);

  rig.world.selfdestruct(rig.acc2, rig.sensorB);
  Receipt dangling = rig.registerMethod(rig.sensorB, "Method 2", rig.serverA,
                                        rig.sensorB, rig.sensorB, rig.acc2);
  CHECK_FALSE(dangling.ok);
  CHECK(dangling.code == ErrCode::DanglingAddress);
}

TEST_CASE("update swaps the contract fields and nothing else") {
  RcRig rig;
  REQUIRE(rig.registerMethod(rig.sensorB, "Method 1", rig.serverA, rig.sensorB,
                             rig.sensorB, rig.acc1)
              .ok);

  Receipt upd = rig.call(rig.sensorB, "methodUpdate",
                         {Value(std::string("Method 1")),
                          Value(std::string("ACC 1 v2")), Value(rig.acc2),
                          Value(std::string("accessControl"))});
  REQUIRE(upd.ok);
  const MethodEntry* e = rig.view().entry("Method 1");
  CHECK(e->scAddress == rig.acc2);
  CHECK(e->scName == "ACC 1 v2");
  CHECK(e->abiList == std::vector<std::string>{"accessControl"});
  // Identity columns are immutable by construction.
  CHECK(e->subject == rig.serverA);
  CHECK(e->object == rig.sensorB);
  CHECK(e->creator == rig.sensorB);

  // Lookups reflect the update immediately.
  ValueList got = rig.world.callReadOnly(rig.serverA, rig.rc, "getContract",
                                         {Value(std::string("Method 1"))});
  CHECK(got[0].asAddr() == rig.acc2);

  Receipt unknown = rig.call(rig.sensorB, "methodUpdate",
                             {Value(std::string("Method 9")),
                              Value(std::string("x")), Value(rig.acc2)});
  CHECK(unknown.code == ErrCode::NoSuchMethod);

  Receipt denied = rig.call(rig.serverA, "methodUpdate",
                            {Value(std::string("Method 1")),
                             Value(std::string("x")), Value(rig.acc1)});
  CHECK(denied.code == ErrCode::PermissionDenied);
}

TEST_CASE("delete removes exactly one entry") {
  RcRig rig;
  REQUIRE(rig.registerMethod(rig.sensorB, "Method 1", rig.serverA, rig.sensorB,
                             rig.sensorB, rig.acc1)
              .ok);
  REQUIRE(rig.registerMethod(rig.sensorB, "Method 2", rig.serverA, rig.sensorB,
                             rig.sensorB, rig.acc2)
              .ok);

  Receipt denied = rig.call(rig.serverA, "methodDelete",
                            {Value(std::string("Method 1"))});
  CHECK(denied.code == ErrCode::PermissionDenied);

  REQUIRE(rig.call(rig.sensorB, "methodDelete", {Value(std::string("Method 1"))}).ok);
  CHECK(rig.view().entry("Method 1") == nullptr);
  CHECK(rig.view().entry("Method 2") != nullptr);

  Receipt gone = rig.call(rig.sensorB, "methodDelete",
                          {Value(std::string("Method 1"))});
  CHECK(gone.code == ErrCode::NoSuchMethod);
}

// Randomized register/update/delete sequences against a plain map oracle:
// the table stays a function methodName -> entry and only creators mutate.
TEST_CASE("random call sequences agree with a map oracle") {
  RcRig rig;
  std::mt19937_64 rng(404);
  std::vector<Address> accounts = {rig.admin, rig.serverA, rig.sensorB};
  std::vector<Address> contracts = {rig.acc1, rig.acc2, rig.rc};
  std::map<std::string, std::pair<Address, Address>> oracle;  // name -> (creator, sc)

  for (int step = 0; step < 400; ++step) {
    std::string name = "m" + std::to_string(rng() % 12);
    const Address& actor = accounts[rng() % accounts.size()];
    const Address& sc = contracts[rng() % contracts.size()];
    switch (rng() % 3) {
      case 0: {
        Receipt r = rig.call(actor, "methodRegister",
                             {Value(name), Value(rig.serverA), Value(rig.sensorB),
                              Value(std::string("sc")), Value(actor), Value(sc),
                              Value(std::string("accessControl"))});
        bool shouldWork = oracle.count(name) == 0;
        CHECK(r.ok == shouldWork);
        if (r.ok) oracle[name] = {actor, sc};
        break;
      }
      case 1: {
        Receipt r = rig.call(actor, "methodUpdate",
                             {Value(name), Value(std::string("sc2")), Value(sc),
                              Value(std::string("accessControl"))});
        auto it = oracle.find(name);
        bool shouldWork = it != oracle.end() && it->second.first == actor;
        CHECK(r.ok == shouldWork);
        if (r.ok) it->second.second = sc;
        break;
      }
      case 2: {
        Receipt r = rig.call(actor, "methodDelete", {Value(name)});
        auto it = oracle.find(name);
        bool shouldWork = it != oracle.end() && it->second.first == actor;
        CHECK(r.ok == shouldWork);
        if (r.ok) oracle.erase(it);
        break;
      }
    }
  }

  // Final table state matches the oracle exactly.
  const auto& table = rig.view().table();
  REQUIRE(table.size() == oracle.size());
  for (const auto& [name, want] : oracle) {
    auto it = table.find(name);
    REQUIRE(it != table.end());
    CHECK(it->second.creator == want.first);
    CHECK(it->second.scAddress == want.second);
  }
}
