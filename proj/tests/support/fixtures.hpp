// Copyright 2026 The SmartEmbed Authors
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

#pragma once

#include <string>
#include <vector>

namespace smartembed::testing::fixtures {

inline constexpr const char* kOverflowExample = R"(pragma solidity ^0.4.15;

contract Overflow {
    uint private r = 0;

    function addValue(uint value) returns (bool) {
        // possible overflow
        r += value;
    }
}
)";

inline constexpr const char* kOverflowContractStream =
    "1_10 : pragma solidity ^ versionliteral ; contract Overflow { uint private r = 0 ; "
    "function addValue ( uint value ) returns ( bool ) { r += value ; } }";

inline constexpr const char* kOverflowStatementStream =
    "8_8 : sourceUnit contractDefinition contractPart functionDefinition block statement "
    "simpleStatement r += value ; function addValue add value ( uint value ) returns ( bool ) "
    "contract Overflow overflow { }";

inline const char* kTokenSale = R"(pragma solidity ^0.4.24;

contract Owned {
    address public owner;
    modifier onlyOwner { require(msg.sender == owner); _; }
}

contract TokenSale is Owned {
    mapping(address => uint256) public balances;
    uint256 public rate = 100;
    event Bought(address indexed buyer, uint256 amount);

    function buyTokens(address beneficiary) public payable {
        uint256 amount = msg.value * rate;
        balances[beneficiary] += amount;
        emit Bought(beneficiary, amount);
    }

    function setRate(uint256 newRate) public onlyOwner {
        if (newRate > 0) {
            rate = newRate;
        } else {
            revert();
        }
    }

    function sum(uint256[] items) public pure returns (uint256 total) {
        for (uint256 i = 0; i < items.length; i++) {
            total += items[i];
        }
        return total;
    }
}
)";

inline const char* kWallet = R"(pragma solidity ^0.5.0;

library SafeMath {
    function add(uint a, uint b) internal pure returns (uint) {
        uint c = a + b;
        require(c >= a, "overflow");
        return c;
    }
}

contract Wallet {
    using SafeMath for uint;
    mapping(address => uint) private deposits;

    function deposit() external payable {
        deposits[msg.sender] = deposits[msg.sender].add(msg.value);
    }

    function withdraw(uint amount) external {
        require(deposits[msg.sender] >= amount);
        (bool ok, ) = msg.sender.call.value(amount)("");
        require(ok);
        deposits[msg.sender] -= amount;
    }
}
)";

inline std::vector<std::string> frontendCorpus() {
  return {kOverflowExample, kTokenSale, kWallet, "contract A { }"};
}

struct RenamingFixture {
  std::string source;
  std::vector<std::string> variables;
};

inline std::vector<RenamingFixture> renamingFixtures() {
  return {
      {kOverflowExample, {"r", "value"}},
      {kTokenSale,
       {"owner", "balances", "rate", "beneficiary", "amount", "newRate", "items", "total", "i"}},
      {kWallet, {"a", "b", "c", "deposits", "amount", "ok"}},
  };
}

}  // namespace smartembed::testing::fixtures
