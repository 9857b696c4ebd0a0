#!/usr/bin/env python3
# Copyright 2026 The Stylomark Authors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Generates a stand-in sensorimotor norms file in the Lancaster CSV layout.

The real Lancaster Sensorimotor Norms cannot be redistributed with this
repository. This script writes a file with the same header and row count
(39,707 rows, a few multi-word items among them) so the ingest path, the
statistics and the embed/detect loop can be exercised offline.

Words are the most frequent English words from the wordfreq `large_en`
list, plus every word of the mock LM corpus and the classifier seed terms.
Ratings are drawn per (word, dimension) from a Beta distribution whose mean
follows the published per-dimension means, shrunk for function words, and
raised for hand-curated strong associates of each dimension ("smell" for
olfactory, "kick" for foot/leg, ...). Every draw is seeded from a hash of the
word, so the output is reproducible.

Usage:
  make_norms_standin.py --wordfreq path/to/large_en.msgpack.gz \
      --corpus data/mock_corpus.txt --seeds data/seed_terms.tsv \
      --out data/norms/sensorimotor_norms_standin.csv
"""

import argparse
import gzip
import hashlib
import random
import re
import struct

ROWS = 39707

DIMENSIONS = [
    ("Auditory", 1.51),
    ("Gustatory", 0.32),
    ("Haptic", 1.07),
    ("Interoceptive", 1.03),
    ("Olfactory", 0.39),
    ("Visual", 2.90),
    ("Foot_leg", 0.81),
    ("Hand_arm", 1.45),
    ("Head", 2.27),
    ("Mouth", 1.26),
    ("Torso", 0.82),
]

# Strong associates per dimension. Inflected forms present in the word list
# are added automatically.
STRONG = {
    "Auditory": """hear heard hearing listen listened sound sounds loud quiet noise
        music song songs sing singing voice voices hum buzz ring ringing bell click
        whistle whistles crack thunder bang echo silence silent rumble roar shout
        scream whisper melody rhythm tone speaker speakers headphones radio
        piano drum drums guitar jazz chirp bark hiss sneeze cough applause siren
        crash talk talking call calls audio acoustic clap knock""",
    "Gustatory": """taste tastes tasted tasty flavor flavour sweet sour bitter salty
        salt sugar honey chocolate lemon lemons juice wine beer coffee tea latte
        bread cheese butter cookie cookies pizza sushi spice spices spicy vinegar
        syrup candy cake dessert fruit mango berries banana grapes olive soup
        meal delicious yogurt vanilla cream creamy ginger wasabi sauce omelette
        espresso milk eat eating eaten edible raisins""",
    "Haptic": """touch touched touching feel felt soft hard smooth rough sharp
        texture warm cold hot cool wet dry sticky silky fabric fur skin itchy
        grip grab hold holding press pressed squeeze stroke tickle sting burn
        prickly velvet wool cotton silk heavy weight thick thin stretchy fluffy
        firm slippery icy frozen melted dough clay stone metal glass""",
    "Interoceptive": """hungry hunger thirsty thirst tired tiredness sleepy sleep
        pain ache aches headache headaches nausea dizzy fever breathe breath
        breathing heartbeat pulse sick illness fatigue stress anxious anxiety calm
        relaxed tension tense nervous excited fear afraid angry anger sad mood
        emotion emotions feeling feelings throbbing exhausted sore itch urinate
        hormone insulin digest digestion stomach rumble energy""",
    "Olfactory": """smell smells smelled smelling smelly scent scents scented aroma
        aromas aromatic odor odour odors perfume fragrance fragrant stink stinks
        stinky sniff sniffing nose nostril whiff musty rotten fresh roasted smoke
        smoky incense garlic onion onions cinnamon coffee herbs herb flowers
        flower rose roses lavender pine mint vanilla sewage skunk spoiled
        ferment fermented sour bakery""",
    "Visual": """see seen seeing saw look looks looked looking watch watched view
        views sight visible invisible bright dark color colors colour colours
        red green blue yellow white black golden shine shining glow glowing light
        shadow shadows picture pictures image images painting paintings screen
        eye eyes vision glance stare flash sparkle colorful rainbow sunset
        sunrise mirror lens camera telescope map maps show shows appear appears
        portrait photograph""",
    "Foot_leg": """walk walked walking walks run runs running ran kick kicked
        kicking jump jumped jumping hop hopped step steps stepped march marched
        dance dancing dancer hike hiking hikers climb climbing stairs foot feet
        toe toes leg legs knee knees heel ankle shoe shoes boot boots sock
        socks pedal stride sprint jog jogging skate skating soccer football
        trail trek stomp squat""",
    "Hand_arm": """hand hands handed arm arms finger fingers thumb wrist elbow
        palm grab grabbed grasp hold held throw throwing catch catching write
        writing wrote draw drawing paint knit sew sewing stitch type typing
        click clap wave waving push pushed pull pulled lift lifted carry carried
        knead stir whisk chop cut crack pour shake squeeze press knock hammer
        tools tool handle""",
    "Head": """think thinking thought thoughts mind minds idea ideas brain
        remember memory memories imagine imagined reason reasoning believe
        decide decided understand understanding know knowledge learn learning
        study plan puzzle solve solved calculate question questions wonder
        curious focus attention concentrate read reading head nod headache
        face dream dreams consider argue analyze logic wisdom""",
    "Mouth": """mouth lips tongue teeth tooth bite bitten chew chewing swallow
        taste tastes lick kiss kissing speak speaking spoke talk talking said say
        says shout sing singing whistle eat eating drink drinking sip sipping
        suck blow blowing breathe cough yawn smile smiled smiling laugh laughing
        spit gargle saliva throat lisp pronounce pronunciation""",
    "Torso": """chest back belly stomach waist hips hip shoulder shoulders
        torso spine ribs lungs heart breathe breathing bend bending twist
        twisting lean leaning posture hug hugging carry lift lifting swim
        swimming row rowing sit sitting lie lying bow bowing shrug dive diving
        waistline abdomen core""",
}

MULTIWORD = """ice cream,fire engine,hot dog,traffic light,swimming pool,tooth
    brush,post office,living room,bus stop,car park,fire alarm,credit card,
    tea bag,sea shell,rain coat,ice skate,hair dryer,washing machine,
    coffee table,golf ball,high heel,air bag,bath tub,fish tank,hand bag,
    horse race,paper clip,pop corn,race car,rocking chair,sail boat,
    sea lion,snow ball,sun glasses,table cloth,tennis ball,test tube,
    waste basket,wind chime,apple pie,baking soda,boiling water,cell phone,
    chewing gum,dish washer,dog house,door bell,ear ring,egg shell,
    fire place,flash light,french fries,gold fish,green house,hand shake,
    home work,lamp post,mail box,night club""".replace("\n", " ")


def load_msgpack_gz(path):
    """Minimal msgpack reader for the wordfreq data layout."""
    data = gzip.open(path).read()
    pos = 0

    def read():
        nonlocal pos
        t = data[pos]
        pos += 1
        if t <= 0x7F:
            return t
        if 0x80 <= t <= 0x8F:
            return {read(): read() for _ in range(t & 0x0F)}
        if 0x90 <= t <= 0x9F:
            return [read() for _ in range(t & 0x0F)]
        if 0xA0 <= t <= 0xBF:
            n = t & 0x1F
            s = data[pos:pos + n].decode()
            pos += n
            return s
        if t in (0xD9, 0xDA):
            width = 1 if t == 0xD9 else 2
            n = int.from_bytes(data[pos:pos + width], "big")
            pos += width
            s = data[pos:pos + n].decode()
            pos += n
            return s
        if t in (0xDC, 0xDD):
            width = 2 if t == 0xDC else 4
            n = int.from_bytes(data[pos:pos + width], "big")
            pos += width
            return [read() for _ in range(n)]
        if t == 0xDE:
            n = struct.unpack(">H", data[pos:pos + 2])[0]
            pos += 2
            return {read(): read() for _ in range(n)}
        if t == 0xC0:
            return None
        if t in (0xC2, 0xC3):
            return t == 0xC3
        if t == 0xCC:
            v = data[pos]
            pos += 1
            return v
        if t == 0xCD:
            v = struct.unpack(">H", data[pos:pos + 2])[0]
            pos += 2
            return v
        raise ValueError(f"unsupported msgpack tag {t:#x}")

    return read()


WORD_RE = re.compile(r"[a-z]+(-[a-z]+)*")


def corpus_words(path):
    out = []
    for token in open(path, encoding="utf-8").read().split():
        w = re.sub(r"^[^A-Za-z0-9]+|[^A-Za-z0-9]+$", "", token).lower()
        if WORD_RE.fullmatch(w):
            out.append(w)
    return out


def seed_words(path):
    out = []
    for line in open(path, encoding="utf-8"):
        if line.startswith("#") or line.startswith("version"):
            continue
        parts = line.rstrip("\n").split("\t")
        if len(parts) == 3:
            out.extend(parts[2].split())
    return out


def rng_for(word, dim):
    digest = hashlib.sha256(f"{word}|{dim}".encode()).digest()
    return random.Random(int.from_bytes(digest[:8], "big"))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--wordfreq", required=True)
    ap.add_argument("--corpus", required=True)
    ap.add_argument("--seeds", required=True)
    ap.add_argument("--out", required=True)
    args = ap.parse_args()

    ranked = [w for band in load_msgpack_gz(args.wordfreq)[1:] for w in band]
    ranked = [w for w in ranked if WORD_RE.fullmatch(w) and len(w) > 1 or w in ("a", "i")]
    rank = {w: i for i, w in enumerate(ranked)}
    function_words = set(ranked[:150])

    strong = {dim: set(STRONG[dim].split()) for dim, _ in DIMENSIONS}
    multi = [m.strip() for m in MULTIWORD.split(",") if m.strip()]
    multi = [" ".join(m.split()) for m in multi]

    words = []
    seen = set()

    def add(w):
        if w not in seen:
            seen.add(w)
            words.append(w)

    for pool in (corpus_words(args.corpus), seed_words(args.seeds),
                 [w for s in strong.values() for w in s]):
        for w in pool:
            add(w)
    for w in ranked:
        if len(words) >= ROWS - len(multi):
            break
        add(w)
    words = words[:ROWS - len(multi)]
    words.sort(key=lambda w: (rank.get(w, len(rank)), w))
    rows = sorted(words + multi)

    def inflections(stem):
        return {stem, stem + "s", stem + "es", stem + "ed", stem + "ing", stem + "y"}

    strong_expanded = {
        dim: set().union(*(inflections(w) for w in ws)) for dim, ws in strong.items()
    }

    with open(args.out, "w", encoding="utf-8") as f:
        header = ["Word"] + [f"{d}.mean" for d, _ in DIMENSIONS] + ["Dominant.sensorimotor"]
        f.write(",".join(header) + "\n")
        for w in rows:
            ratings = []
            for dim, mean in DIMENSIONS:
                r = rng_for(w, dim)
                m = mean / 5.0
                kappa = 4.0
                value = 5.0 * r.betavariate(kappa * m, kappa * (1.0 - m))
                if w in function_words:
                    value *= 0.35
                if w in strong_expanded[dim]:
                    value = 3.6 + 1.4 * r.random()
                ratings.append(round(value, 4))
            dominant = DIMENSIONS[max(range(len(ratings)), key=lambda i: ratings[i])][0]
            f.write(",".join([w.upper()] + [f"{v:.4f}" for v in ratings] + [dominant]) + "\n")


if __name__ == "__main__":
    main()
