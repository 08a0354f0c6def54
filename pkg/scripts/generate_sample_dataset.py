"""Regenerate the bundled sample training dataset (deterministic).

The rows are synthetic user stories whose wording correlates with their
story-point weight, so a text model has real signal to learn.
"""

import csv
import random
from pathlib import Path

OUT = Path(__file__).resolve().parent.parent / "src" / "storytutor" / "data" / "sample_dataset.csv"

ROLES = ["user", "admin", "developer", "designer", "product owner", "tester", "customer"]

TIERS = [
    # (weights, title templates, description templates)
    (
        [1, 1, 2, 2],
        ["Fix typo in {area}", "Update label on {area}", "Correct link in {area}"],
        [
            "As a {role}, I want the typo on the {area} fixed, so that the text reads correctly.",
            "As a {role}, I want the outdated label on the {area} updated, so that it matches the docs.",
            "As a {role}, I want the broken link on the {area} corrected, so that navigation works.",
        ],
    ),
    (
        [3, 3, 5, 5],
        ["Add validation to {area}", "Improve search on {area}", "Add filter to {area}"],
        [
            "As a {role}, I want input validation added to the {area}, so that invalid data is rejected with a clear message.",
            "As a {role}, I want the search on the {area} improved with partial matching, so that I can find records faster.",
            "As a {role}, I want a date filter added to the {area}, so that I can narrow down the results I review.",
        ],
    ),
    (
        [8, 8, 13, 13],
        ["Refactor {area} service", "Migrate {area} storage", "Redesign {area} architecture"],
        [
            "As a {role}, I want the {area} service refactored into independent components with a documented interface, so that the team can extend and deploy each part separately without regression risk.",
            "As a {role}, I want the {area} storage migrated to the new schema with a reversible migration plan and full data verification, so that historical records remain consistent across the rollout.",
            "As a {role}, I want the {area} architecture redesigned to support asynchronous integration with external systems, so that throughput scales and failures are isolated from the main workflow.",
        ],
    ),
]

AREAS = [
    "login page", "billing dashboard", "report export", "settings screen",
    "notification center", "project list", "issue board", "profile page",
    "search results", "audit log", "file upload", "permissions panel",
]


def main() -> None:
    rng = random.Random(20240521)
    rows = []
    for _ in range(200):
        weights, titles, descriptions = TIERS[rng.randrange(len(TIERS))]
        i = rng.randrange(len(titles))
        area = rng.choice(AREAS)
        role = rng.choice(ROLES)
        rows.append(
            (
                titles[i].format(area=area),
                descriptions[i].format(area=area, role=role),
                weights[rng.randrange(len(weights))],
            )
        )
    OUT.parent.mkdir(parents=True, exist_ok=True)
    with open(OUT, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["title", "description", "weight"])
        writer.writerows(rows)
    print(f"wrote {len(rows)} rows to {OUT}")


if __name__ == "__main__":
    main()
