/**
 * Recorded authoring-service responses used by the contract tests.
 *
 * Generated by scripts/record-fixtures.py against the real HTTP app; do not
 * edit by hand. Each constant is one response body captured verbatim.
 */

import type {
  ConflictReport,
  DiffResponse,
  JargonCheckResponse,
  LineageResponse,
  PresentationBody,
  SearchResponse,
} from "../src/types.js";

export const PRESENTATION_BODY: PresentationBody = {
  "schema_version": 1,
  "presentation": {
    "id": "ddfb08b2f5ce44e3bab38e1728a3a6f1",
    "title": "Quarterly results",
    "total_duration_s": 600,
    "audience": {
      "expertise_level": 3,
      "description": "general public interested in productivity"
    },
    "topic": "media multitasking",
    "created_at": "2026-08-25T21:57:32.499070Z",
    "sections": [
      {
        "id": "2f2a4c2198914df3a4b7d5d07ea83fab",
        "title": "Headline",
        "duration_s": 40,
        "emphasis": "high",
        "slides": [
          {
            "id": "52ce135ab38d4787adeaffa7904d564e",
            "title": "The Illusion of Productivity",
            "lineage_ref": null,
            "elements": [
              {
                "id": "d7eafe50ac564a4bb190e190020f239d",
                "kind": "text",
                "content": "Heavy Media Multitaskers (HMMs) show reduced cognitive control.",
                "bounds": {
                  "x": 0.1,
                  "y": 0.3,
                  "w": 0.8,
                  "h": 0.3
                }
              },
              {
                "id": "1a1443b6069e4bc48a687404d2f73a1e",
                "kind": "text",
                "content": "Their media multitasking index predicts distraction.",
                "bounds": {
                  "x": 0.1,
                  "y": 0.65,
                  "w": 0.8,
                  "h": 0.2
                }
              }
            ]
          }
        ]
      },
      {
        "id": "0f3cf64925a3461f85ea1d52478202cb",
        "title": "Walkthrough",
        "duration_s": 90,
        "emphasis": "high",
        "slides": [
          {
            "id": "bc525a22de4542e398f81f749a95cdd5",
            "title": "Key takeaways",
            "lineage_ref": null,
            "elements": [
              {
                "id": "9d9008fb8bb540429e0134edd0eeb141",
                "kind": "text",
                "content": "Multitasking reduces focus.",
                "bounds": {
                  "x": 0.1,
                  "y": 0.2,
                  "w": 0.8,
                  "h": 0.3
                }
              },
              {
                "id": "7d8334551aa84334961068b4d0b604cc",
                "kind": "text",
                "content": "Productivity apps do not fix attention.",
                "bounds": {
                  "x": 0.1,
                  "y": 0.6,
                  "w": 0.8,
                  "h": 0.3
                }
              }
            ]
          }
        ]
      },
      {
        "id": "def2b5e53ebd4919a49e28b11847a955",
        "title": "Comparisons",
        "duration_s": 76,
        "emphasis": "medium",
        "slides": []
      },
      {
        "id": "49926692fd7b4d3695c406de000f7388",
        "title": "Backdrop",
        "duration_s": 104,
        "emphasis": "low",
        "slides": []
      },
      {
        "id": "6e6c7360835e41c885de874e8203c4e0",
        "title": "Warmup",
        "duration_s": 60,
        "emphasis": "none",
        "slides": []
      }
    ]
  },
  "revision": 7,
  "dirty_slide_ids": []
};

export const REPORT_ALL_LEVELS: ConflictReport = {
  "sections": [
    {
      "conflict_level": "high",
      "id": "2f2a4c2198914df3a4b7d5d07ea83fab",
      "overflow": false,
      "pairs": [
        {
          "other_id": "def2b5e53ebd4919a49e28b11847a955",
          "ratio": 0.5263157894736842
        },
        {
          "other_id": "49926692fd7b4d3695c406de000f7388",
          "ratio": 0.38461538461538464
        }
      ]
    },
    {
      "conflict_level": "low",
      "id": "0f3cf64925a3461f85ea1d52478202cb",
      "overflow": false,
      "pairs": [
        {
          "other_id": "49926692fd7b4d3695c406de000f7388",
          "ratio": 0.8653846153846154
        }
      ]
    },
    {
      "conflict_level": "medium",
      "id": "def2b5e53ebd4919a49e28b11847a955",
      "overflow": false,
      "pairs": [
        {
          "other_id": "49926692fd7b4d3695c406de000f7388",
          "ratio": 0.7307692307692307
        }
      ]
    },
    {
      "conflict_level": "none",
      "id": "49926692fd7b4d3695c406de000f7388",
      "overflow": false,
      "pairs": []
    },
    {
      "conflict_level": "none",
      "id": "6e6c7360835e41c885de874e8203c4e0",
      "overflow": false,
      "pairs": []
    }
  ],
  "sum_duration_s": 370,
  "total_duration_s": 600
};

export const REPORT_TAIL_OVERFLOW: ConflictReport = {
  "sections": [
    {
      "conflict_level": "high",
      "id": "2f2a4c2198914df3a4b7d5d07ea83fab",
      "overflow": false,
      "pairs": [
        {
          "other_id": "def2b5e53ebd4919a49e28b11847a955",
          "ratio": 0.5263157894736842
        },
        {
          "other_id": "49926692fd7b4d3695c406de000f7388",
          "ratio": 0.38461538461538464
        }
      ]
    },
    {
      "conflict_level": "low",
      "id": "0f3cf64925a3461f85ea1d52478202cb",
      "overflow": false,
      "pairs": [
        {
          "other_id": "49926692fd7b4d3695c406de000f7388",
          "ratio": 0.8653846153846154
        }
      ]
    },
    {
      "conflict_level": "medium",
      "id": "def2b5e53ebd4919a49e28b11847a955",
      "overflow": false,
      "pairs": [
        {
          "other_id": "49926692fd7b4d3695c406de000f7388",
          "ratio": 0.7307692307692307
        }
      ]
    },
    {
      "conflict_level": "none",
      "id": "49926692fd7b4d3695c406de000f7388",
      "overflow": true,
      "pairs": []
    },
    {
      "conflict_level": "none",
      "id": "6e6c7360835e41c885de874e8203c4e0",
      "overflow": true,
      "pairs": []
    }
  ],
  "sum_duration_s": 370,
  "total_duration_s": 300
};

export const REPORT_OVERFLOW_OVERRIDE: ConflictReport = {
  "sections": [
    {
      "conflict_level": "high",
      "id": "2f2a4c2198914df3a4b7d5d07ea83fab",
      "overflow": false,
      "pairs": [
        {
          "other_id": "def2b5e53ebd4919a49e28b11847a955",
          "ratio": 0.5263157894736842
        },
        {
          "other_id": "49926692fd7b4d3695c406de000f7388",
          "ratio": 0.38461538461538464
        }
      ]
    },
    {
      "conflict_level": "low",
      "id": "0f3cf64925a3461f85ea1d52478202cb",
      "overflow": false,
      "pairs": [
        {
          "other_id": "49926692fd7b4d3695c406de000f7388",
          "ratio": 0.8653846153846154
        }
      ]
    },
    {
      "conflict_level": "medium",
      "id": "def2b5e53ebd4919a49e28b11847a955",
      "overflow": true,
      "pairs": [
        {
          "other_id": "49926692fd7b4d3695c406de000f7388",
          "ratio": 0.7307692307692307
        }
      ]
    },
    {
      "conflict_level": "none",
      "id": "49926692fd7b4d3695c406de000f7388",
      "overflow": true,
      "pairs": []
    },
    {
      "conflict_level": "none",
      "id": "6e6c7360835e41c885de874e8203c4e0",
      "overflow": true,
      "pairs": []
    }
  ],
  "sum_duration_s": 370,
  "total_duration_s": 200
};

export const PRESENTATION_KEYRESULT: PresentationBody = {
  "schema_version": 1,
  "presentation": {
    "id": "91422d5410584d64bdb10e2a966863b5",
    "title": "Launch plan",
    "total_duration_s": 600,
    "audience": {
      "expertise_level": 4,
      "description": "product team"
    },
    "topic": null,
    "created_at": "2026-08-25T21:57:32.522253Z",
    "sections": [
      {
        "id": "53203cff8a9445d38a7f1c60ad2774a6",
        "title": "KeyResult",
        "duration_s": 120,
        "emphasis": "high",
        "slides": []
      },
      {
        "id": "3be4b34022504876ab90acf9d5e01b1d",
        "title": "Background",
        "duration_s": 240,
        "emphasis": "low",
        "slides": []
      }
    ]
  },
  "revision": 2,
  "dirty_slide_ids": []
};

export const REPORT_KEYRESULT: ConflictReport = {
  "sections": [
    {
      "conflict_level": "high",
      "id": "53203cff8a9445d38a7f1c60ad2774a6",
      "overflow": false,
      "pairs": [
        {
          "other_id": "3be4b34022504876ab90acf9d5e01b1d",
          "ratio": 0.5
        }
      ]
    },
    {
      "conflict_level": "none",
      "id": "3be4b34022504876ab90acf9d5e01b1d",
      "overflow": false,
      "pairs": []
    }
  ],
  "sum_duration_s": 360,
  "total_duration_s": 600
};

export const JARGON_CHECK: JargonCheckResponse = {
  "slide_id": "52ce135ab38d4787adeaffa7904d564e",
  "slide_text": "The Illusion of Productivity\nHeavy Media Multitaskers (HMMs) show reduced cognitive control.\nTheir media multitasking index predicts distraction.",
  "context": {
    "original_description": "general public interested in productivity",
    "expanded_description": "Audience described as: general public interested in productivity. At expertise level 3/5 they are assumed to know terms of difficulty 3 and below, and to find harder terms unfamiliar.",
    "inferred_expertise_level": 3,
    "known_concepts": [
      "cognitive control",
      "task-switching cost",
      "working memory",
      "prefrontal cortex"
    ],
    "likely_jargon": [
      "Heavy Media Multitaskers (HMMs)",
      "media multitasking index",
      "neural network",
      "dual-task interference",
      "attentional filter",
      "proactive interference"
    ],
    "domain_background": "Domain inferred from description: general public interested in productivity"
  },
  "terms": [
    {
      "term": "Heavy Media Multitaskers (HMMs)",
      "definition": "People who habitually consume several media streams at the same time, a group studied for differences in attention and memory.",
      "alternatives": [
        "frequent media users",
        "people who multitask with media"
      ],
      "start_index": 29,
      "end_index": 60,
      "hidden": false
    },
    {
      "term": "media multitasking index",
      "definition": "A questionnaire-based score of how many media a person typically uses simultaneously.",
      "alternatives": [
        "media-use score",
        "measure of simultaneous media use"
      ],
      "start_index": 99,
      "end_index": 123,
      "hidden": false
    }
  ]
};

export const DIFF_CLEAN: DiffResponse = {
  "slide_id": "bc525a22de4542e398f81f749a95cdd5",
  "lineage_id": "c37d9ad34c434720a973e2183c4a69ab",
  "version_index": 0,
  "dirty": false,
  "diff": {
    "added": [],
    "removed": [],
    "modified": [],
    "title_changed": false
  }
};

export const DIFF_MIXED: DiffResponse = {
  "slide_id": "bc525a22de4542e398f81f749a95cdd5",
  "lineage_id": "c37d9ad34c434720a973e2183c4a69ab",
  "version_index": 0,
  "dirty": true,
  "diff": {
    "added": [
      "8b0d391f090c4909a7478412ed9abc58"
    ],
    "removed": [
      "7d8334551aa84334961068b4d0b604cc"
    ],
    "modified": [
      {
        "element_id": "9d9008fb8bb540429e0134edd0eeb141",
        "changed_fields": [
          "content"
        ]
      }
    ],
    "title_changed": true
  }
};

export const LINEAGE_SINGLE: LineageResponse = {
  "lineage_id": "c37d9ad34c434720a973e2183c4a69ab",
  "versions": [
    {
      "version_index": 0,
      "saved_at": "2026-08-25T21:57:32.532783Z",
      "replaced_at": null,
      "slide": {
        "id": "bc525a22de4542e398f81f749a95cdd5",
        "title": "Key takeaways",
        "lineage_ref": null,
        "elements": [
          {
            "id": "9d9008fb8bb540429e0134edd0eeb141",
            "kind": "text",
            "content": "Multitasking reduces focus.",
            "bounds": {
              "x": 0.1,
              "y": 0.2,
              "w": 0.8,
              "h": 0.3
            }
          },
          {
            "id": "7d8334551aa84334961068b4d0b604cc",
            "kind": "text",
            "content": "Productivity apps do not fix attention.",
            "bounds": {
              "x": 0.1,
              "y": 0.6,
              "w": 0.8,
              "h": 0.3
            }
          }
        ]
      }
    }
  ]
};

export const SEARCH_PRODUCTIVITY: SearchResponse = {
  "hits": [
    {
      "kind": "slide",
      "granularity": "slide",
      "score": 2,
      "saved_at": "2026-08-25T21:57:32.532783Z",
      "snippet": "The Illusion of Productivity",
      "lineage_id": "c43c0029096046b0b0e8126565f44b98",
      "version_index": 0
    },
    {
      "kind": "entry",
      "granularity": "section",
      "score": 1,
      "saved_at": "2026-08-25T21:57:32.534458Z",
      "snippet": "The Illusion of Productivity",
      "entry_id": "1617e96aa11046fe88441b3354694508"
    },
    {
      "kind": "entry",
      "granularity": "presentation",
      "score": 1,
      "saved_at": "2026-08-25T21:57:32.532783Z",
      "snippet": "The Illusion of Productivity",
      "entry_id": "2547363e59914a478b4343e7c6b09a5c"
    },
    {
      "kind": "slide",
      "granularity": "slide",
      "score": 1,
      "saved_at": "2026-08-25T21:57:32.532783Z",
      "snippet": "Productivity apps do not fix attention.",
      "lineage_id": "c37d9ad34c434720a973e2183c4a69ab",
      "version_index": 0
    }
  ]
};
