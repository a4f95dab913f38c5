"""Shared fixture corpus.

POSTS_50 exercises every structural path at least once: titles, hashtags,
mentions, URLs, bracket faces, emoji, quotes, decimals, ASCII runs, empty
and punctuation-only texts, lottery markers, idioms, hedging, and both
media flags. Engagement numbers are arbitrary but varied per account.
"""

from __future__ import annotations

P1 = "【好消息!】我们的高铁提速了!你怎么看?"

POSTS_50: list[dict] = [
    {"id": "p01", "account_id": "news_a", "published_at": "2019-01-05T08:30:00Z",
     "text": P1,
     "has_image": False, "has_video": False, "is_original": True,
     "likes": 320, "comments": 45, "reposts": 80},
    {"id": "p02", "account_id": "news_a", "published_at": "2019-01-09T12:00:00Z",
     "text": "【提速公告】今天上午,铁路局宣布高铁提速,时速达到350,旅客出行更加方便。",
     "has_image": True, "has_video": False, "is_original": True,
     "likes": 210, "comments": 30, "reposts": 55},
    {"id": "p03", "account_id": "news_a", "published_at": "2019-01-14T09:15:00+08:00",
     "text": "据报道,北京地铁新线路开通,票价没有上涨,市民纷纷点赞。",
     "has_image": False, "has_video": False, "is_original": True,
     "likes": 150, "comments": 22, "reposts": 31},
    {"id": "p04", "account_id": "news_a", "published_at": "2019-01-21T19:45:00Z",
     "text": "#春运# 今年春运期间,全国铁路发送旅客超过3亿人次,数据惊人!",
     "has_image": True, "has_video": False, "is_original": True,
     "likes": 505, "comments": 88, "reposts": 120},
    {"id": "p05", "account_id": "news_a", "published_at": "2019-02-02T07:20:00Z",
     "text": "@央视 报道了这次事故,原因仍然不确定,可能是设备故障。",
     "has_image": False, "has_video": False, "is_original": True,
     "likes": 98, "comments": 40, "reposts": 12},
    {"id": "p06", "account_id": "news_a", "published_at": "2019-02-11T16:05:00Z",
     "text": "网友「老王」说:“这条路终于通车了!”详情见 http://t.cn/abc123",
     "has_image": False, "has_video": False, "is_original": True,
     "likes": 260, "comments": 35, "reposts": 48},
    {"id": "p07", "account_id": "news_a", "published_at": "2019-02-18T10:40:00Z",
     "text": "转发抽奖:关注并转发本条,有机会获得车票一张![礼物]",
     "has_image": True, "has_video": False, "is_original": True,
     "likes": 900, "comments": 300, "reposts": 1500},
    {"id": "p08", "account_id": "news_a", "published_at": "2019-02-25T14:30:00Z",
     "text": "",
     "has_image": False, "has_video": False, "is_original": True,
     "likes": 2, "comments": 0, "reposts": 0},
    {"id": "p09", "account_id": "news_a", "published_at": "2019-03-03T09:00:00Z",
     "text": "。。。??!!",
     "has_image": False, "has_video": False, "is_original": True,
     "likes": 5, "comments": 1, "reposts": 0},
    {"id": "p10", "account_id": "news_a", "published_at": "2019-03-12T20:10:00Z",
     "text": "breaking: CPI up 2.1% in July, growth 5.3%",
     "has_image": False, "has_video": False, "is_original": True,
     "likes": 60, "comments": 8, "reposts": 9},
    {"id": "p11", "account_id": "news_b", "published_at": "2019-01-06T06:50:00Z",
     "text": "【暴雨预警】气象局发布暴雨红色预警,北京、天津部分地区有大到暴雨,请大家注意安全!",
     "has_image": True, "has_video": False, "is_original": True,
     "likes": 740, "comments": 120, "reposts": 230},
    {"id": "p12", "account_id": "news_b", "published_at": "2019-01-13T11:25:00Z",
     "text": "医生提醒:疫苗接种之后,可能出现轻微发热,这是正常现象,不必担心。",
     "has_image": False, "has_video": False, "is_original": True,
     "likes": 310, "comments": 54, "reposts": 77},
    {"id": "p13", "account_id": "news_b", "published_at": "2019-01-20T15:35:00Z",
     "text": "救援队一心一意搜救被困群众,全力以赴,众志成城!",
     "has_image": False, "has_video": True, "is_original": True,
     "likes": 880, "comments": 95, "reposts": 160},
    {"id": "p14", "account_id": "news_b", "published_at": "2019-01-27T18:00:00Z",
     "text": "他说他明天去上海,她说她昨天在广州,它们都是真的吗?",
     "has_image": False, "has_video": False, "is_original": True,
     "likes": 45, "comments": 19, "reposts": 3},
    {"id": "p15", "account_id": "news_b", "published_at": "2019-02-03T08:45:00Z",
     "text": "太好了!非常感谢大家的支持,我们特别开心![鼓掌][鼓掌][鼓掌]",
     "has_image": False, "has_video": False, "is_original": True,
     "likes": 420, "comments": 66, "reposts": 50},
    {"id": "p16", "account_id": "news_b", "published_at": "2019-02-10T13:55:00Z",
     "text": "虽然天气恶劣,但是比赛照常举行,选手们表现精彩,观众热情不减。",
     "has_image": True, "has_video": False, "is_original": True,
     "likes": 230, "comments": 28, "reposts": 41},
    {"id": "p17", "account_id": "news_b", "published_at": "2019-02-17T21:20:00Z",
     "text": "警方通报:嫌疑人已经被逮捕,案件正在进一步调查,等待法院判决。",
     "has_image": False, "has_video": False, "is_original": True,
     "likes": 560, "comments": 140, "reposts": 190},
    {"id": "p18", "account_id": "news_b", "published_at": "2019-02-24T09:30:00Z",
     "text": "这款手机的芯片采用7纳米工艺,人工智能性能提升40%,售价3999元。",
     "has_image": True, "has_video": False, "is_original": True,
     "likes": 380, "comments": 90, "reposts": 70},
    {"id": "p19", "account_id": "news_b", "published_at": "2019-03-05T17:10:00Z",
     "text": "据了解,新学期开始后,学校食堂价格保持稳定,学生和家长都很满意。",
     "has_image": False, "has_video": False, "is_original": True,
     "likes": 120, "comments": 15, "reposts": 18},
    {"id": "p20", "account_id": "news_b", "published_at": "2019-03-15T07:05:00Z",
     "text": "重要通知:明天上午10点,全市防空警报试鸣,请勿惊慌。",
     "has_image": False, "has_video": False, "is_original": True,
     "likes": 640, "comments": 75, "reposts": 260},
    {"id": "p21", "account_id": "news_c", "published_at": "2019-01-08T12:40:00Z",
     "text": "【数据发布】去年全国快递业务量突破600亿件,增长25.3%,你贡献了多少?",
     "has_image": True, "has_video": False, "is_original": True,
     "likes": 450, "comments": 85, "reposts": 95},
    {"id": "p22", "account_id": "news_c", "published_at": "2019-01-16T10:15:00Z",
     "text": "消防员成功扑灭大火,无人受伤,感谢他们的勇敢!🎉",
     "has_image": False, "has_video": True, "is_original": True,
     "likes": 1020, "comments": 160, "reposts": 300},
    {"id": "p23", "account_id": "news_c", "published_at": "2019-01-24T14:50:00Z",
     "text": "专家表示,或许今年房价会保持平稳,但是成交量可能下降。",
     "has_image": False, "has_video": False, "is_original": True,
     "likes": 85, "comments": 32, "reposts": 10},
    {"id": "p24", "account_id": "news_c", "published_at": "2019-02-01T09:25:00Z",
     "text": "#环保行动# 志愿者在海边清理垃圾3吨,井然有序,为他们点赞!@环保组织",
     "has_image": True, "has_video": False, "is_original": True,
     "likes": 670, "comments": 70, "reposts": 140},
    {"id": "p25", "account_id": "news_c", "published_at": "2019-02-08T19:35:00Z",
     "text": "今天下午,地铁2号线因为信号故障延误30分钟,乘客被迫换乘,大家出行注意。",
     "has_image": False, "has_video": False, "is_original": True,
     "likes": 95, "comments": 48, "reposts": 22},
    {"id": "p26", "account_id": "news_c", "published_at": "2019-02-15T08:10:00Z",
     "text": "『快讯』股市今日大涨,沪指上涨2.8%,成交额突破8000亿元。",
     "has_image": False, "has_video": False, "is_original": True,
     "likes": 300, "comments": 110, "reposts": 60},
    {"id": "p27", "account_id": "news_c", "published_at": "2019-02-22T16:45:00Z",
     "text": "你知道吗?每天走路一万步,未必适合所有人,运动要量力而行。",
     "has_image": False, "has_video": False, "is_original": True,
     "likes": 210, "comments": 55, "reposts": 35},
    {"id": "p28", "account_id": "news_c", "published_at": "2019-03-01T11:00:00Z",
     "text": "新华社消息:国务院批准设立新的自贸试验区,改革开放再进一步。",
     "has_image": False, "has_video": False, "is_original": True,
     "likes": 520, "comments": 60, "reposts": 180},
    {"id": "p29", "account_id": "news_c", "published_at": "2019-03-09T13:20:00Z",
     "text": "提醒:近日有谣言称自来水受到污染,经检测水质正常,请勿相信传言。",
     "has_image": False, "has_video": False, "is_original": True,
     "likes": 430, "comments": 88, "reposts": 150},
    {"id": "p30", "account_id": "news_c", "published_at": "2019-03-18T15:55:00Z",
     "text": "恭喜中国队夺冠!队员们再接再厉,为国争光![庆祝]🏆",
     "has_image": True, "has_video": True, "is_original": True,
     "likes": 2100, "comments": 320, "reposts": 800},
    {"id": "p31", "account_id": "blogger_d", "published_at": "2019-01-07T22:30:00Z",
     "text": "晚上加班回家,地铁上人很少,突然觉得这个城市很安静。",
     "has_image": False, "has_video": False, "is_original": True,
     "likes": 28, "comments": 6, "reposts": 1},
    {"id": "p32", "account_id": "blogger_d", "published_at": "2019-01-15T08:05:00Z",
     "text": "早餐吃了包子和豆浆,一共5元,便宜又好吃[哈哈]",
     "has_image": True, "has_video": False, "is_original": True,
     "likes": 35, "comments": 8, "reposts": 2},
    {"id": "p33", "account_id": "blogger_d", "published_at": "2019-01-23T12:10:00Z",
     "text": "转发:这篇文章写得真好,大家都来看看。",
     "has_image": False, "has_video": False, "is_original": False,
     "likes": 12, "comments": 2, "reposts": 4},
    {"id": "p34", "account_id": "blogger_d", "published_at": "2019-01-31T18:40:00Z",
     "text": "今天跑步5公里,用时28分钟,比上周快了2分钟,继续加油!",
     "has_image": False, "has_video": False, "is_original": True,
     "likes": 52, "comments": 11, "reposts": 1},
    {"id": "p35", "account_id": "blogger_d", "published_at": "2019-02-06T09:50:00Z",
     "text": "我觉得这部电影一般,剧情拖沓,但是配乐不错,给三颗星吧。",
     "has_image": False, "has_video": False, "is_original": True,
     "likes": 40, "comments": 14, "reposts": 3},
    {"id": "p36", "account_id": "blogger_d", "published_at": "2019-02-13T20:25:00Z",
     "text": "猫咪今天特别粘人,一直趴在我腿上睡觉,太可爱了!🐱🐱",
     "has_image": True, "has_video": False, "is_original": True,
     "likes": 150, "comments": 30, "reposts": 8},
    {"id": "p37", "account_id": "blogger_d", "published_at": "2019-02-20T07:35:00Z",
     "text": "求问:从机场到市区,地铁和机场大巴哪个更快?在线等,急!",
     "has_image": False, "has_video": False, "is_original": True,
     "likes": 18, "comments": 25, "reposts": 0},
    {"id": "p38", "account_id": "blogger_d", "published_at": "2019-02-27T23:00:00Z",
     "text": "失眠了,数了三百只羊还是睡不着,唉。",
     "has_image": False, "has_video": False, "is_original": True,
     "likes": 33, "comments": 9, "reposts": 0},
    {"id": "p39", "account_id": "blogger_d", "published_at": "2019-03-07T10:20:00Z",
     "text": "周末去了趟植物园,樱花开了,拍了好多照片,春天真美。",
     "has_image": True, "has_video": False, "is_original": True,
     "likes": 88, "comments": 16, "reposts": 5},
    {"id": "p40", "account_id": "blogger_d", "published_at": "2019-03-16T14:15:00Z",
     "text": "新买的书到了,据说很精彩,今晚开始读。",
     "has_image": False, "has_video": False, "is_original": True,
     "likes": 25, "comments": 4, "reposts": 1},
    {"id": "p41", "account_id": "blogger_e", "published_at": "2019-01-10T09:40:00Z",
     "text": "【科普】为什么冬天容易静电?因为空气干燥,摩擦产生的电荷不易散失。",
     "has_image": False, "has_video": False, "is_original": True,
     "likes": 195, "comments": 24, "reposts": 45},
    {"id": "p42", "account_id": "blogger_e", "published_at": "2019-01-18T16:30:00Z",
     "text": "实测:高铁上的4G网络速度比普通列车快一倍,视频通话基本流畅。",
     "has_image": False, "has_video": True, "is_original": True,
     "likes": 160, "comments": 35, "reposts": 28},
    {"id": "p43", "account_id": "blogger_e", "published_at": "2019-01-26T11:45:00Z",
     "text": "关于昨天的传闻,官方还没有回应,大家不要着急,等正式声明。",
     "has_image": False, "has_video": False, "is_original": True,
     "likes": 75, "comments": 20, "reposts": 15},
    {"id": "p44", "account_id": "blogger_e", "published_at": "2019-02-04T08:55:00Z",
     "text": "分享一个小技巧:手机电量低于20%时,关闭定位可以多撑一小时。",
     "has_image": False, "has_video": False, "is_original": True,
     "likes": 240, "comments": 42, "reposts": 90},
    {"id": "p45", "account_id": "blogger_e", "published_at": "2019-02-12T19:05:00Z",
     "text": "今天路过施工现场,工人们冒着严寒作业,向他们致敬!",
     "has_image": True, "has_video": False, "is_original": True,
     "likes": 310, "comments": 38, "reposts": 55},
    {"id": "p46", "account_id": "blogger_e", "published_at": "2019-02-19T12:50:00Z",
     "text": "吐槽:快递放在门口没人通知,下雨全淋湿了,你们觉得该投诉吗?",
     "has_image": True, "has_video": False, "is_original": True,
     "likes": 130, "comments": 58, "reposts": 12},
    {"id": "p47", "account_id": "blogger_e", "published_at": "2019-02-26T15:40:00Z",
     "text": "看完纪录片,了解了大熊猫保护工作的不易,保护动物人人有责。",
     "has_image": False, "has_video": False, "is_original": True,
     "likes": 140, "comments": 18, "reposts": 30},
    {"id": "p48", "account_id": "blogger_e", "published_at": "2019-03-06T21:15:00Z",
     "text": "夜跑注意事项:穿亮色衣服,带好手机,避开没有路灯的路段。",
     "has_image": False, "has_video": False, "is_original": True,
     "likes": 105, "comments": 13, "reposts": 20},
    {"id": "p49", "account_id": "blogger_e", "published_at": "2019-03-14T10:05:00Z",
     "text": "好消息!小区门口的断头路终于要修了,预计6月通车,期待!",
     "has_image": False, "has_video": False, "is_original": True,
     "likes": 220, "comments": 46, "reposts": 25},
    {"id": "p50", "account_id": "blogger_e", "published_at": "2019-03-20T17:30:00Z",
     "text": "【测评】三款咖啡对比:口感、价格、包装各有优劣,详见长图。https://example.com/review?id=42",
     "has_image": True, "has_video": False, "is_original": True,
     "likes": 185, "comments": 27, "reposts": 33},
]


def write_jsonl(posts: list[dict], path) -> None:
    import json

    with open(path, "w", encoding="utf-8") as fh:
        for post in posts:
            fh.write(json.dumps(post, ensure_ascii=False) + "\n")


# Twenty drafts for cross-surface identity checks: text plus media flags.
DRAFTS_20: list[tuple[str, bool, bool]] = [
    (P1, False, False),
    ("", False, False),
    ("。。。", False, False),
    ("【快讯】股市大涨!", True, False),
    ("今天天气很好,适合出门散步。", False, False),
    ("#话题# @某人 看这个 http://t.cn/x1 [笑]", True, True),
    ("专家表示,可能还会降温,大家注意保暖。", False, False),
    ("为什么地铁今天这么挤?谁知道原因?", False, False),
    ("一心一意,全力以赴!", False, False),
    ("数据:增长25.3%,总量8000亿元。", True, False),
    ("他说她明天来,这件事就这么定了。", False, False),
    ("非常感谢!太好了!🎉", False, False),
    ("据报道,事故原因正在调查。", False, False),
    ("「引用」这是一段带引号的话。", False, False),
    ("华盛顿 Washington DC 2024", False, False),
    ("雨一直下,气氛不算融洽……", False, False),
    ("你们觉得呢?我觉得还行吧。", False, True),
    ("【公告】系统今晚维护,暂停服务2小时。", False, False),
    ("虽然很难,但是我们不会放弃!", False, False),
    ("转发抽奖:关注并转发,抽3人送书![礼物]", True, False),
]
