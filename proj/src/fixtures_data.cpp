// Copyright 2026 The qres Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Embedded copies of the shipped fixture files (data/appendix.json and
// data/tables.json). A unit test asserts byte equality with the files so the
// two cannot drift; checksum pinning lives in fixtures.cpp.

#include <string>

namespace qres::detail {

const std::string& embedded_appendix_json() {
    static const std::string text = R"qres_fixture(
{
  "description": "Reference 4x4 generalized eigenproblem and the QNN gate parameters of its four training states",
  "gamma_deg": -2.0,
  "beta": 1.0,
  "phi0": [
    1.0,
    2.0,
    3.0,
    4.0
  ],
  "parameter_sets": [
    {
      "lambda_LN": 1.2,
      "M": 0.5
    },
    {
      "lambda_LN": 1.2,
      "M": 0.45
    },
    {
      "lambda_LN": 1.4,
      "M": 0.5
    },
    {
      "lambda_LN": 1.4,
      "M": 0.45
    }
  ],
  "gate_params": [
    [
      [
        [
          "6.2777443",
          "2.9623668",
          "4.1739912"
        ],
        [
          "2.1441712",
          "3.2506409",
          "4.0256934"
        ],
        [
          "3.3965152e-5",
          "6.0410719",
          "4.7356915"
        ],
        [
          "1.8482275",
          "5.6914926",
          "4.8712077"
        ],
        [
          "1.1949457e-13",
          "3.5505292",
          "1.0660791"
        ],
        [
          "1.9448582",
          "5.4494443",
          "1.8766041"
        ]
      ],
      [
        [
          "3.2506917",
          "0.33835053",
          "5.0115643"
        ],
        [
          "2.2775216",
          "0.28397676",
          "5.6699934"
        ],
        [
          "4.8914018",
          "3.1740475",
          "3.5373149"
        ],
        [
          "0.57324088",
          "5.7461190",
          "5.5679650"
        ],
        [
          "2.6023750",
          "5.8771977",
          "0.71344692"
        ],
        [
          "5.0057235",
          "1.2177472",
          "3.3084846"
        ]
      ],
      [
        [
          "3.6596761",
          "5.3445787",
          "3.3469312"
        ],
        [
          "5.5604734",
          "1.3144962",
          "3.1209221"
        ],
        [
          "0.88926297",
          "4.7070713",
          "5.2865720"
        ],
        [
          "3.6204617",
          "5.8235817",
          "1.9200119"
        ],
        [
          "0.60789013",
          "1.1107392",
          "6.2551217"
        ],
        [
          "2.0389147",
          "4.6483450",
          "0.12981953"
        ]
      ]
    ],
    [
      [
        [
          "6.2777443",
          "1.6532806",
          "5.5299764"
        ],
        [
          "2.1441712",
          "1.7400076",
          "6.0886784"
        ],
        [
          "3.3965152e-5",
          "6.2642851",
          "2.0849619"
        ],
        [
          "1.8482275",
          "3.1492755",
          "2.8281085"
        ],
        [
          "5.8295873e-16",
          "3.0775306",
          "1.5378615"
        ],
        [
          "1.9448582",
          "3.0582225",
          "2.9575124"
        ]
      ],
      [
        [
          "3.0978861",
          "0.88025045",
          "1.2276460"
        ],
        [
          "2.4936917",
          "0.010903232",
          "0.011435008"
        ],
        [
          "3.7364287",
          "2.5512588",
          "6.0294924"
        ],
        [
          "4.9692655",
          "3.1640944",
          "0.19206865"
        ],
        [
          "4.0859952",
          "3.6108334",
          "1.2612017"
        ],
        [
          "5.0374656",
          "4.9234509",
          "0.57810557"
        ]
      ],
      [
        [
          "3.0744302",
          "0.65630126",
          "5.9030437"
        ],
        [
          "6.0204277",
          "3.6330497",
          "4.3871384"
        ],
        [
          "5.2626009",
          "5.8649426",
          "1.9436437"
        ],
        [
          "6.2162886",
          "0.060260054",
          "0.44858441"
        ],
        [
          "2.0183523",
          "0.39174813",
          "6.1193180"
        ],
        [
          "6.0965328",
          "4.1774902",
          "1.5052414"
        ]
      ]
    ],
    [
      [
        [
          "6.2777443",
          "3.7113049",
          "5.8903913"
        ],
        [
          "2.1441712",
          "3.6780977",
          "5.2731752"
        ],
        [
          "3.3965152e-5",
          "6.1982117",
          "1.7222717"
        ],
        [
          "1.8482275",
          "2.8075969",
          "2.6714938"
        ],
        [
          "1.4487108e-14",
          "2.6655653",
          "6.8465449e-2"
        ],
        [
          "1.9448582",
          "5.2419791",
          "3.8776989"
        ]
      ],
      [
        [
          "0.86774749",
          "3.7376420",
          "0.74231458"
        ],
        [
          "0.66126758",
          "3.5271878",
          "1.6559840"
        ],
        [
          "1.5172551",
          "3.1828408",
          "4.1716714"
        ],
        [
          "2.0018253",
          "3.1072955",
          "3.5669951"
        ],
        [
          "0.12009725",
          "3.0624554",
          "0.72391278"
        ],
        [
          "5.8197627",
          "1.9134910",
          "4.6149969"
        ]
      ],
      [
        [
          "0.49403602",
          "0.59579062",
          "6.1259356"
        ],
        [
          "2.8070350",
          "4.6902432",
          "0.46483782"
        ],
        [
          "3.0910778",
          "5.5677624",
          "5.5603318"
        ],
        [
          "3.7144027",
          "3.1327314",
          "2.1026759"
        ],
        [
          "2.2346506",
          "1.1773512",
          "5.8904195"
        ],
        [
          "1.4376781",
          "4.9916224",
          "2.8062603"
        ]
      ]
    ],
    [
      [
        [
          "6.2777443",
          "4.6395106",
          "2.0782170"
        ],
        [
          "2.1441712",
          "0.76407343",
          "2.3665769"
        ],
        [
          "3.3965152e-5",
          "5.9719467",
          "2.8865707"
        ],
        [
          "1.8482275",
          "2.9538057",
          "2.9023886"
        ],
        [
          "1.5688326e-14",
          "0.19871604",
          "1.5182071"
        ],
        [
          "1.9448582",
          "0.098396666",
          "3.5893679"
        ]
      ],
      [
        [
          "3.7577772",
          "3.6340573",
          "1.5114065"
        ],
        [
          "3.4197664",
          "5.0242534",
          "1.8561713"
        ],
        [
          "2.6410367",
          "0.39176977",
          "2.4164686"
        ],
        [
          "5.0180240",
          "1.6082621",
          "3.2162220"
        ],
        [
          "2.0420129",
          "3.3161902",
          "6.0162206"
        ],
        [
          "0.64636427",
          "4.6717138",
          "3.2288892"
        ]
      ],
      [
        [
          "1.4781995",
          "5.8066125",
          "3.0777385"
        ],
        [
          "0.51672262",
          "4.1419640",
          "4.9904366"
        ],
        [
          "3.0799878",
          "6.0354042",
          "0.20994452"
        ],
        [
          "6.1868892",
          "1.5643044",
          "4.6456366"
        ],
        [
          "0.76679182",
          "0.067824759",
          "0.082950279"
        ],
        [
          "5.7389526",
          "5.1092334",
          "5.7486968"
        ]
      ]
    ]
  ],
  "h_res": [
    [
      [
        "89.55105672",
        "29.96865528"
      ],
      [
        "-71.61897281",
        "-54.24046502"
      ],
      [
        "71.32224612",
        "54.5001247"
      ],
      [
        "84.10305776",
        "-26.89469849"
      ]
    ],
    [
      [
        "-71.61897281",
        "-54.24046502"
      ],
      [
        "49.07619985",
        "75.61013658"
      ],
      [
        "-47.19178977",
        "-73.34045931"
      ],
      [
        "-88.66338303",
        "-3.61063443"
      ]
    ],
    [
      [
        "71.32224612",
        "54.5001247"
      ],
      [
        "-47.19178977",
        "-73.34045931"
      ],
      [
        "46.82508651",
        "72.12727791"
      ],
      [
        "85.84825993",
        "3.55833856"
      ]
    ],
    [
      [
        "84.10305776",
        "-26.89469849"
      ],
      [
        "-88.66338303",
        "-3.61063443"
      ],
      [
        "85.84825993",
        "3.55833856"
      ],
      [
        "53.3190466",
        "-69.41101231"
      ]
    ]
  ],
  "n_res": [
    [
      [
        "-1.81352045",
        "-0.6028637"
      ],
      [
        "1.45656633",
        "1.0973103"
      ],
      [
        "-1.44743132",
        "-1.10790096"
      ],
      [
        "-1.70943956",
        "0.54708644"
      ]
    ],
    [
      [
        "1.45656633",
        "1.0973103"
      ],
      [
        "-1.01540018",
        "-1.54838119"
      ],
      [
        "0.95991351",
        "1.49245168"
      ],
      [
        "1.81973426",
        "0.07490585"
      ]
    ],
    [
      [
        "-1.44743132",
        "-1.10790096"
      ],
      [
        "0.95991351",
        "1.49245168"
      ],
      [
        "-0.95030104",
        "-1.46887722"
      ],
      [
        "-1.74893355",
        "-0.07627396"
      ]
    ],
    [
      [
        "-1.70943956",
        "0.54708644"
      ],
      [
        "1.81973426",
        "0.07490585"
      ],
      [
        "-1.74893355",
        "-0.07627396"
      ],
      [
        "-1.09854298",
        "1.42115795"
      ]
    ]
  ],
  "notation_note": "source entries of the form 3.3965152(-5) denote 3.3965152e-5; one N entry used 'j' for the imaginary unit"
}
)qres_fixture";
    // the raw literal opens with a newline that is not part of the file
    static const std::string stripped = text.substr(1);
    return stripped;
}

const std::string& embedded_tables_json() {
    static const std::string text = R"qres_fixture(
{
  "yng": {
    "fermi_momentum": 0.9,
    "rows": [
      {
        "beta": 1.5,
        "v_even": -9.93,
        "v_odd": -7.66,
        "v_direct": -8.795,
        "v_exchange": -1.135
      },
      {
        "beta": 0.9,
        "v_even": -227.73,
        "v_odd": -82.55,
        "v_direct": -155.14,
        "v_exchange": -72.59
      },
      {
        "beta": 0.5,
        "v_even": 1021.17,
        "v_odd": 717.4,
        "v_direct": 869.285,
        "v_exchange": 151.885
      }
    ]
  },
  "lambda_lambda": {
    "ranges": [
      1.342,
      0.777,
      0.35
    ],
    "v0": [
      -21.34,
      -187.0,
      10850
    ],
    "v_sigma_sigma": [
      0.1932,
      32.17,
      2035
    ]
  },
  "volkov_label": "Volkov No.1"
}
)qres_fixture";
    static const std::string stripped = text.substr(1);
    return stripped;
}

}  // namespace qres::detail
